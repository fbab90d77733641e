#include "tder/group_ring.hpp"

#include <cctype>

namespace tder {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_number(std::string_view s) {
  s = trim(s);
  if (s.empty()) return false;
  bool digit = false;
  int slashes = 0;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c))) digit = true;
    else if (c == '/') ++slashes;
    else return false;
  }
  return digit && slashes <= 1 && s.front() != '/' && s.back() != '/';
}

struct Term {
  bool negative;
  std::string_view body;
};

std::vector<Term> split_terms(std::string_view s) {
  std::vector<Term> terms;
  bool negative = false;
  std::size_t start = 0;
  char prev = '\0';
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if ((c == '+' || c == '-') && prev != '^' && prev != '(') {
      auto body = trim(s.substr(start, i - start));
      if (body.empty()) {
        if (c == '-') negative = !negative;
      } else {
        terms.push_back({negative, body});
        negative = c == '-';
      }
      start = i + 1;
    }
    if (!std::isspace(static_cast<unsigned char>(c))) prev = c;
  }
  auto body = trim(s.substr(start));
  if (body.empty()) throw SpecError("dangling operator in '" + std::string(s) + "'");
  terms.push_back({negative, body});
  return terms;
}

}  // namespace

template <ExactField F>
GroupRingElement<F> parse_element(const GroupPtr& g, const F& field, std::string_view text) {
  auto s = trim(text);
  if (s.empty()) throw SpecError("empty group ring element");
  GroupRingElement<F> out(g, field);
  if (s == "0") return out;
  for (const auto& t : split_terms(s)) {
    auto coef = field.one();
    std::string_view word = t.body;
    auto star = t.body.find('*');
    if (is_number(t.body)) {
      coef = parse_scalar(field, t.body);
      word = "1";
    } else if (star != std::string_view::npos && is_number(t.body.substr(0, star))) {
      coef = parse_scalar(field, t.body.substr(0, star));
      word = trim(t.body.substr(star + 1));
    }
    if (t.negative) coef = -coef;
    out.add_to(g->parse_element(word), coef);
  }
  return out;
}

template <ExactField F>
std::string format_element(const GroupRingElement<F>& a) {
  std::string out;
  const auto& G = a.group();
  for (Element g = 0; g < G.order(); ++g) {
    auto c = a.coeff(g);
    if (is_zero(c)) continue;
    bool negative = false;
    if constexpr (std::is_same_v<F, RationalField>) {
      if (sgn(c) < 0) {
        negative = true;
        c = -c;
      }
    }
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    const bool unit = c == a.field().one();
    const bool identity = g == G.identity();
    if (identity) out += to_string(c);
    else if (unit) out += G.name(g);
    else out += to_string(c) + "*" + G.name(g);
  }
  return out.empty() ? "0" : out;
}

template GroupRingElement<PrimeField> parse_element(const GroupPtr&, const PrimeField&, std::string_view);
template GroupRingElement<RationalField> parse_element(const GroupPtr&, const RationalField&, std::string_view);
template std::string format_element(const GroupRingElement<PrimeField>&);
template std::string format_element(const GroupRingElement<RationalField>&);

}  // namespace tder
