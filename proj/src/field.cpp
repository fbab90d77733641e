#include "tder/field.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace tder {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw SpecError("invalid " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

}  // namespace

AnyField parse_field(std::string_view text) {
  auto s = trim(text);
  if (s == "Q" || s == "QQ" || s == "rational" || s == "rationals") return RationalField{};
  std::string_view digits = s;
  if (s.starts_with("GF(") && s.ends_with(")")) {
    digits = s.substr(3, s.size() - 4);
  } else if (s.starts_with("GF") || s.starts_with("F")) {
    digits = s.substr(s.starts_with("GF") ? 2 : 1);
  }
  const auto p = parse_int(digits, "field");
  if (p < 2 || p > std::numeric_limits<std::int32_t>::max())
    throw SpecError("field modulus out of range: " + std::string(s));
  return PrimeField(static_cast<std::uint32_t>(p));
}

std::string field_name(const AnyField& f) {
  return std::visit([](const auto& x) { return x.name(); }, f);
}

std::uint32_t field_characteristic(const AnyField& f) {
  return std::visit([](const auto& x) { return x.characteristic(); }, f);
}

Fp parse_scalar(const PrimeField& f, std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return f.from_int(parse_int(s, "coefficient"));
  const Fp num = f.from_int(parse_int(s.substr(0, slash), "coefficient"));
  const Fp den = f.from_int(parse_int(s.substr(slash + 1), "coefficient"));
  if (den.is_zero()) throw SpecError("coefficient has zero denominator in " + f.name());
  return num / den;
}

mpq_class parse_scalar(const RationalField&, std::string_view text) {
  auto s = std::string(trim(text));
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw SpecError("invalid coefficient: '" + s + "'");
  if (q.get_den() == 0) throw SpecError("coefficient has zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace tder
