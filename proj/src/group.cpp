#include "tder/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>

namespace tder {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string power_name(const std::string& base, std::int64_t k) {
  if (k == 1) return base;
  return base + "^" + std::to_string(k);
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

Word expand(const Word& w) {
  Word out;
  for (const auto& l : w) {
    const std::int64_t step = l.exponent < 0 ? -1 : 1;
    for (std::int64_t i = 0; i < std::abs(l.exponent); ++i) out.push_back({l.generator, step});
  }
  return out;
}

Word compress(const Word& w) {
  Word out;
  for (const auto& l : w) {
    if (l.exponent == 0) continue;
    if (!out.empty() && out.back().generator == l.generator) {
      out.back().exponent += l.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l.exponent = -l.exponent;
  return out;
}

Element FiniteGroup::power(Element g, std::int64_t k) const {
  const auto ord = static_cast<std::int64_t>(element_order(g));
  k = mod(k, ord);
  Element acc = identity_;
  for (std::int64_t i = 0; i < k; ++i) acc = mul(acc, g);
  return acc;
}

std::size_t FiniteGroup::element_order(Element g) const {
  std::size_t k = 1;
  for (Element x = g; x != identity_; x = mul(x, g)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Element g : generators_)
    for (Element h : generators_)
      if (!commute(g, h)) return false;
  return true;
}

std::optional<Element> FiniteGroup::find(std::string_view name) const {
  for (Element g = 0; g < order(); ++g)
    if (names_[g] == name) return g;
  return std::nullopt;
}

std::optional<std::uint32_t> FiniteGroup::generator_index(std::string_view name) const {
  for (std::uint32_t i = 0; i < generator_names_.size(); ++i)
    if (generator_names_[i] == name) return i;
  return std::nullopt;
}

std::uint32_t FiniteGroup::dihedral_n() const {
  if (family_ != GroupFamily::dihedral) throw DomainError("not a dihedral group: " + description());
  return params_[0];
}

std::string FiniteGroup::description() const {
  switch (family_) {
    case GroupFamily::cyclic:
      return "C" + std::to_string(params_[0]);
    case GroupFamily::dihedral:
      return "D" + std::to_string(2 * params_[0]);
    case GroupFamily::abelian: {
      std::string s;
      for (std::size_t i = 0; i < params_.size(); ++i) s += (i ? "xC" : "C") + std::to_string(params_[i]);
      return s;
    }
    case GroupFamily::table:
      break;
  }
  return "table group of order " + std::to_string(order());
}

Element FiniteGroup::rotation(std::int64_t i) const {
  const auto n = dihedral_n();
  return static_cast<Element>(mod(i, n));
}

Element FiniteGroup::reflection(std::int64_t i) const {
  const auto n = dihedral_n();
  return static_cast<Element>(mod(i, n) + n);
}

Element FiniteGroup::evaluate(const Word& w) const {
  Element acc = identity_;
  for (const auto& l : w) {
    if (l.generator >= generators_.size()) throw SpecError("word uses unknown generator index");
    acc = mul(acc, power(generators_[l.generator], l.exponent));
  }
  return acc;
}

Word FiniteGroup::parse_word(std::string_view text) const {
  Word w;
  auto s = trim(text);
  if (s.empty()) throw SpecError("empty word");
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto star = s.find('*', pos);
    if (star == std::string_view::npos) star = s.size();
    auto factor = trim(s.substr(pos, star - pos));
    pos = star + 1;
    if (factor.empty()) throw SpecError("empty factor in word '" + std::string(s) + "'");
    std::string_view base = factor;
    std::int64_t exp = 1;
    if (auto caret = factor.find('^'); caret != std::string_view::npos) {
      base = trim(factor.substr(0, caret));
      auto e = trim(factor.substr(caret + 1));
      if (e.starts_with("(") && e.ends_with(")")) e = trim(e.substr(1, e.size() - 2));
      if (!e.empty() && e.front() == '+') e.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(e.data(), e.data() + e.size(), exp);
      if (e.empty() || ec != std::errc() || ptr != e.data() + e.size())
        throw SpecError("invalid exponent in '" + std::string(factor) + "'");
    }
    if (base == "1") continue;
    auto gi = generator_index(base);
    if (!gi) throw SpecError("unknown generator '" + std::string(base) + "' in word '" + std::string(s) + "'");
    w.push_back({*gi, exp});
    if (star == s.size()) break;
  }
  return compress(w);
}

std::string FiniteGroup::format_word(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "*";
    out += power_name(generator_names_.at(w[i].generator), w[i].exponent);
  }
  return out;
}

Element FiniteGroup::parse_element(std::string_view text) const {
  if (auto e = find(trim(text))) return *e;
  return evaluate(parse_word(text));
}

void FiniteGroup::finish() {
  const std::size_t n = order();
  if (n == 0) throw SpecError("group must have at least one element");

  inverse_.assign(n, n);
  for (Element g = 0; g < n; ++g)
    for (Element h = 0; h < n; ++h)
      if (mul(g, h) == identity_) {
        inverse_[g] = h;
        break;
      }

  // BFS: generators in declaration order, plain move before inverse move.
  std::vector<bool> seen(n, false);
  std::vector<Word> nf(n);
  std::vector<std::pair<Element, Letter>> parent(n, {0, {0, 0}});
  std::deque<Element> queue{identity_};
  seen[identity_] = true;
  std::vector<Element> visit_order;
  while (!queue.empty()) {
    Element g = queue.front();
    queue.pop_front();
    visit_order.push_back(g);
    for (std::uint32_t i = 0; i < generators_.size(); ++i) {
      for (std::int64_t e : {std::int64_t{1}, std::int64_t{-1}}) {
        Element h = mul(g, e > 0 ? generators_[i] : inverse_[generators_[i]]);
        if (seen[h]) continue;
        seen[h] = true;
        Word w = nf[g];
        w.push_back({i, e});
        nf[h] = compress(w);
        parent[h] = {g, {i, e}};
        queue.push_back(h);
      }
    }
  }
  if (visit_order.size() != n)
    throw SpecError("generators do not generate the group (" + std::to_string(visit_order.size()) + " of " +
                    std::to_string(n) + " elements reached)");
  normal_forms_ = std::move(nf);

  if (family_ == GroupFamily::table) {
    // Non-tree Cayley edges give a defining set of relators.
    for (Element g : visit_order)
      for (std::uint32_t i = 0; i < generators_.size(); ++i) {
        Element h = mul(g, generators_[i]);
        if (h != identity_ && parent[h].first == g && parent[h].second == Letter{i, 1}) continue;
        Word r = normal_forms_[g];
        r.push_back({i, 1});
        auto back = inverse_word(normal_forms_[h]);
        r.insert(r.end(), back.begin(), back.end());
        r = compress(r);
        if (!r.empty() && std::find(relators_.begin(), relators_.end(), r) == relators_.end())
          relators_.push_back(std::move(r));
      }
  }
}

GroupPtr make_cyclic(std::uint32_t n) {
  if (n < 1) throw SpecError("cyclic group order must be >= 1");
  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->family_ = GroupFamily::cyclic;
  g->params_ = {n};
  for (std::uint32_t i = 0; i < n; ++i) g->names_.push_back(i == 0 ? "1" : power_name("x", i));
  g->table_.resize(std::size_t(n) * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) g->table_[i * n + j] = (i + j) % n;
  g->generators_ = {n > 1 ? 1u : 0u};
  g->generator_names_ = {"x"};
  g->relators_ = {{{0, n}}};
  g->finish();
  return g;
}

GroupPtr make_abelian(std::vector<std::uint32_t> factors) {
  if (factors.empty()) throw SpecError("abelian group needs at least one factor");
  for (auto f : factors)
    if (f < 1) throw SpecError("abelian factor orders must be >= 1");
  std::size_t n = 1;
  for (auto f : factors) n *= f;
  if (n > 100000) throw SpecError("abelian group too large");

  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->family_ = GroupFamily::abelian;
  g->params_ = factors;
  const std::size_t r = factors.size();

  auto digits = [&](std::size_t idx) {
    std::vector<std::uint32_t> e(r);
    for (std::size_t i = 0; i < r; ++i) {
      e[i] = idx % factors[i];
      idx /= factors[i];
    }
    return e;
  };
  auto index = [&](const std::vector<std::uint32_t>& e) {
    std::size_t idx = 0;
    for (std::size_t i = r; i-- > 0;) idx = idx * factors[i] + e[i];
    return static_cast<Element>(idx);
  };

  for (std::size_t i = 0; i < r; ++i) g->generator_names_.push_back("x" + std::to_string(i + 1));
  for (std::size_t idx = 0; idx < n; ++idx) {
    auto e = digits(idx);
    std::string name;
    for (std::size_t i = 0; i < r; ++i) {
      if (e[i] == 0) continue;
      if (!name.empty()) name += "*";
      name += power_name(g->generator_names_[i], e[i]);
    }
    g->names_.push_back(name.empty() ? "1" : name);
  }
  g->table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    auto ea = digits(a);
    for (std::size_t b = 0; b < n; ++b) {
      auto eb = digits(b);
      for (std::size_t i = 0; i < r; ++i) eb[i] = (ea[i] + eb[i]) % factors[i];
      g->table_[a * n + b] = index(eb);
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<std::uint32_t> e(r, 0);
    e[i] = factors[i] > 1 ? 1 : 0;
    g->generators_.push_back(index(e));
    g->relators_.push_back({{static_cast<std::uint32_t>(i), factors[i]}});
  }
  for (std::uint32_t i = 0; i < r; ++i)
    for (std::uint32_t j = i + 1; j < r; ++j) g->relators_.push_back({{i, -1}, {j, -1}, {i, 1}, {j, 1}});
  g->finish();
  return g;
}

GroupPtr make_dihedral(std::uint32_t n) {
  if (n < 3) throw SpecError("dihedral group needs rotation order n >= 3");
  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->family_ = GroupFamily::dihedral;
  g->params_ = {n};
  for (std::uint32_t i = 0; i < n; ++i) g->names_.push_back(i == 0 ? "1" : power_name("a", i));
  for (std::uint32_t i = 0; i < n; ++i) g->names_.push_back(i == 0 ? "b" : power_name("a", i) + "*b");
  const std::size_t N = 2 * n;
  g->table_.resize(N * N);
  // (a^i b^j)(a^k b^l) = a^(i + (-1)^j k) b^(j+l)
  for (std::uint32_t x = 0; x < N; ++x)
    for (std::uint32_t y = 0; y < N; ++y) {
      const std::int64_t i = x % n, j = x / n, k = y % n, l = y / n;
      const std::int64_t rot = mod(i + (j ? -k : k), n);
      g->table_[x * N + y] = static_cast<Element>(rot + n * ((j + l) % 2));
    }
  g->generators_ = {1, n};
  g->generator_names_ = {"a", "b"};
  g->relators_ = {{{0, n}}, {{1, 2}}, {{0, 1}, {1, 1}, {0, 1}, {1, 1}}};
  g->finish();
  return g;
}

GroupPtr make_table_group(std::vector<std::string> names, std::vector<std::vector<Element>> table,
                          std::vector<std::string> generator_names) {
  const std::size_t n = names.size();
  if (n == 0) throw SpecError("table group needs elements");
  if (table.size() != n) throw SpecError("multiplication table must have one row per element");
  for (const auto& row : table) {
    if (row.size() != n) throw SpecError("multiplication table must be square");
    for (auto v : row)
      if (v >= n) throw SpecError("multiplication table entry out of range");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (names[i] == names[j]) throw SpecError("duplicate element name '" + names[i] + "'");

  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->family_ = GroupFamily::table;
  g->names_ = std::move(names);
  g->table_.reserve(n * n);
  for (const auto& row : table) g->table_.insert(g->table_.end(), row.begin(), row.end());

  std::optional<Element> id;
  for (Element e = 0; e < n && !id; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = g->mul(e, x) == x && g->mul(x, e) == x;
    if (ok) id = e;
  }
  if (!id) throw SpecError("multiplication table has no identity");
  g->identity_ = *id;
  for (Element x = 0; x < n; ++x) {
    bool has_inverse = false;
    for (Element y = 0; y < n && !has_inverse; ++y) has_inverse = g->mul(x, y) == *id && g->mul(y, x) == *id;
    if (!has_inverse) throw SpecError("element '" + g->names_[x] + "' has no inverse");
  }
  // Full associativity check up to order 64; a fixed stride sample above.
  const std::size_t stride = n <= 64 ? 1 : n / 37 + 1;
  for (Element x = 0; x < n; x += stride)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (g->mul(g->mul(x, y), z) != g->mul(x, g->mul(y, z)))
          throw SpecError("multiplication table is not associative at (" + g->names_[x] + ", " + g->names_[y] +
                          ", " + g->names_[z] + ")");

  for (auto& gn : generator_names) {
    auto e = g->find(gn);
    if (!e) throw SpecError("generator '" + gn + "' is not an element name");
    g->generators_.push_back(*e);
  }
  g->generator_names_ = std::move(generator_names);
  g->finish();
  return g;
}

std::string to_string(DihedralFamily f) {
  switch (f) {
    case DihedralFamily::minus1: return "sigma_-1";
    case DihedralFamily::s0: return "sigma_0";
    case DihedralFamily::s1: return "sigma_1";
    case DihedralFamily::s2: return "sigma_2";
    case DihedralFamily::s3: return "sigma_3";
    case DihedralFamily::s4: return "sigma_4";
    case DihedralFamily::s5: return "sigma_5";
    case DihedralFamily::none: break;
  }
  return "none";
}

DihedralEndoParams dihedral_params(std::uint32_t n, std::uint32_t s, std::uint32_t t) {
  DihedralEndoParams p;
  p.n = n;
  p.s = s % n;
  p.t = t % n;
  p.m = n / std::gcd(n, p.s);
  p.d = n / p.m;
  p.j0 = p.s == 0 ? p.t : p.t % p.s;
  return p;
}

bool Endomorphism::is_identity() const {
  for (Element g = 0; g < images_.size(); ++g)
    if (images_[g] != g) return false;
  return true;
}

bool Endomorphism::is_trivial() const {
  const Element e = group_->identity();
  return std::all_of(images_.begin(), images_.end(), [e](Element x) { return x == e; });
}

std::optional<DihedralEndoParams> Endomorphism::dihedral_params() const {
  if (!st_) return std::nullopt;
  if (family_ != DihedralFamily::s0 && family_ != DihedralFamily::s1 && family_ != DihedralFamily::s3)
    return std::nullopt;
  return tder::dihedral_params(group_->dihedral_n(), st_->first, st_->second);
}

std::string Endomorphism::describe() const {
  std::string s;
  for (std::size_t i = 0; i < generator_images_.size(); ++i) {
    if (i) s += ", ";
    s += group_->generator_names()[i] + "->" + group_->format_word(generator_images_[i]);
  }
  return s;
}

void Endomorphism::classify() {
  family_ = DihedralFamily::none;
  st_.reset();
  if (group_->family() != GroupFamily::dihedral) return;
  const std::uint32_t n = group_->dihedral_n();
  const Element ia = images_[group_->generator(0)];
  const Element ib = images_[group_->generator(1)];
  const bool a_rot = ia < n, b_rot = ib < n;
  const std::uint32_t s = ia % n, t = ib % n;
  st_ = {s, t};
  const bool half = n % 2 == 0 && (s == 0 || s == n / 2);
  if (a_rot && !b_rot) {
    if (n % 2 == 1) family_ = DihedralFamily::s0;
    else family_ = half ? DihedralFamily::s3 : DihedralFamily::s1;
  } else if (a_rot && b_rot) {
    family_ = n % 2 == 1 ? DihedralFamily::minus1 : DihedralFamily::s2;
  } else if (!a_rot && !b_rot) {
    family_ = DihedralFamily::s4;
  } else {
    family_ = DihedralFamily::s5;
  }
}

Expected<Endomorphism> endo_from_images(GroupPtr g, const std::vector<Word>& images) {
  if (images.size() != g->generator_count())
    throw SpecError("expected " + std::to_string(g->generator_count()) + " generator images, got " +
                    std::to_string(images.size()));
  std::vector<Element> gen_img;
  for (const auto& w : images) gen_img.push_back(g->evaluate(w));

  Endomorphism e;
  e.group_ = g;
  for (const auto& w : images) e.generator_images_.push_back(compress(w));
  const std::size_t n = g->order();
  e.images_.resize(n);
  for (Element x = 0; x < n; ++x) {
    Element acc = g->identity();
    for (const auto& l : g->normal_form(x)) acc = g->mul(acc, g->power(gen_img[l.generator], l.exponent));
    e.images_[x] = acc;
  }

  auto image_of_word = [&](const Word& w) {
    Element acc = g->identity();
    for (const auto& l : w) acc = g->mul(acc, g->power(gen_img[l.generator], l.exponent));
    return acc;
  };
  for (const auto& r : g->relators()) {
    const Element v = image_of_word(r);
    if (v != g->identity())
      return Rejection{"not a homomorphism",
                       "relator " + g->format_word(r) + " maps to " + g->name(v) + " != 1"};
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (e.images_[g->mul(x, y)] != g->mul(e.images_[x], e.images_[y]))
        return Rejection{"not a homomorphism", "sigma(" + g->name(x) + "*" + g->name(y) + ") != sigma(" +
                                                   g->name(x) + ")*sigma(" + g->name(y) + ")"};
  e.classify();
  return e;
}

Expected<Endomorphism> endo_from_images(GroupPtr g, const std::map<std::string, std::string>& images) {
  std::vector<Word> words(g->generator_count());
  std::vector<bool> given(g->generator_count(), false);
  for (const auto& [name, text] : images) {
    auto gi = g->generator_index(name);
    if (!gi) throw SpecError("unknown generator '" + name + "' in endomorphism images");
    words[*gi] = g->parse_word(text);
    given[*gi] = true;
  }
  for (std::size_t i = 0; i < given.size(); ++i)
    if (!given[i]) throw SpecError("missing image for generator '" + g->generator_names()[i] + "'");
  return endo_from_images(std::move(g), words);
}

Endomorphism identity_endomorphism(GroupPtr g) {
  std::vector<Word> w;
  for (std::uint32_t i = 0; i < g->generator_count(); ++i) w.push_back({{i, 1}});
  return *endo_from_images(std::move(g), w);
}

Endomorphism trivial_endomorphism(GroupPtr g) {
  return *endo_from_images(g, std::vector<Word>(g->generator_count()));
}

Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner) {
  if (outer.group_ != inner.group_) throw DomainError("composing endomorphisms of different groups");
  const auto& g = *inner.group_;
  std::vector<Word> words;
  for (std::size_t i = 0; i < g.generator_count(); ++i)
    words.push_back(g.normal_form(outer(inner(g.generator(i)))));
  auto r = endo_from_images(inner.group_, words);
  if (!r) throw DomainError("composition failed verification: " + r.rejection().detail);
  return *r;
}

Endomorphism dihedral_rotation_endo(GroupPtr g, std::uint32_t s, std::uint32_t t) {
  const auto n = g->dihedral_n();
  auto r = endo_from_images(g, std::vector<Word>{{{0, s % n}}, {{0, t % n}, {1, 1}}});
  if (!r) throw DomainError("a->a^s, b->a^t b rejected: " + r.rejection().detail);
  return *r;
}

Endomorphism cyclic_power_endo(GroupPtr g, std::int64_t e) {
  if (g->family() != GroupFamily::cyclic) throw DomainError("not a cyclic group: " + g->description());
  return *endo_from_images(g, std::vector<Word>{{{0, e}}});
}

std::vector<Endomorphism> enumerate_endomorphisms(GroupPtr g) {
  const std::uint32_t n = g->dihedral_n();
  std::vector<Endomorphism> out;
  auto add = [&](std::int64_t s, bool a_refl, std::int64_t t, bool b_refl) {
    Word wa{{0, s}}, wb{{0, t}};
    if (a_refl) wa.push_back({1, 1});
    if (b_refl) wb.push_back({1, 1});
    auto r = endo_from_images(g, std::vector<Word>{compress(wa), compress(wb)});
    if (!r) throw DomainError("internal: dihedral family member rejected: " + r.rejection().detail);
    out.push_back(*r);
  };
  if (n % 2 == 1) {
    add(0, false, 0, false);
    for (std::uint32_t s = 0; s < n; ++s)
      for (std::uint32_t t = 0; t < n; ++t) add(s, false, t, true);
    return out;
  }
  const std::uint32_t h = n / 2;
  for (std::uint32_t s = 1; s < n; ++s)
    if (s != h)
      for (std::uint32_t t = 0; t < n; ++t) add(s, false, t, true);
  for (std::uint32_t s : {0u, h})
    for (std::uint32_t t : {0u, h}) add(s, false, t, false);
  for (std::uint32_t s : {0u, h})
    for (std::uint32_t t = 0; t < n; ++t) add(s, false, t, true);
  for (std::uint32_t s = 0; s < n; ++s)
    for (std::uint32_t t : {s, (s + h) % n}) add(s, true, t, true);
  for (std::uint32_t s = 0; s < n; ++s)
    for (std::uint32_t t : {0u, h}) add(s, true, t, false);
  return out;
}

std::vector<Endomorphism> enumerate_endomorphisms_brute(GroupPtr g) {
  const std::size_t n = g->order(), k = g->generator_count();
  double tuples = 1;
  for (std::size_t i = 0; i < k; ++i) tuples *= double(n);
  if (tuples > 2e5) throw DomainError("brute-force endomorphism enumeration too large for " + g->description());
  std::vector<Endomorphism> out;
  std::vector<Element> choice(k, 0);
  while (true) {
    std::vector<Word> words;
    for (auto c : choice) words.push_back(g->normal_form(c));
    if (auto r = endo_from_images(g, words)) out.push_back(*r);
    std::size_t i = 0;
    while (i < k && ++choice[i] == n) choice[i++] = 0;
    if (i == k) break;
  }
  return out;
}

}  // namespace tder
