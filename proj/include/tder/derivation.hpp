#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tder/group_ring.hpp"

namespace tder {

enum class Provenance { extended, inner, solver, power_formula };
std::string to_string(Provenance p);

template <ExactField F>
class TwistedDerivation {
 public:
  using Ring = GroupRingElement<F>;

  TwistedDerivation(Endomorphism sigma, Endomorphism tau, F field, std::vector<Ring> table, Provenance prov,
                    std::optional<Ring> witness = std::nullopt)
      : sigma_(std::move(sigma)),
        tau_(std::move(tau)),
        field_(field),
        table_(std::move(table)),
        provenance_(prov),
        witness_(std::move(witness)) {
    if (sigma_.group_ptr() != tau_.group_ptr()) throw DomainError("sigma and tau act on different groups");
    if (table_.size() != group().order()) throw DomainError("derivation table has wrong length");
    for (const auto& r : table_)
      if (r.group_ptr() != sigma_.group_ptr()) throw DomainError("derivation table over a different group");
  }

  const GroupPtr& group_ptr() const { return sigma_.group_ptr(); }
  const FiniteGroup& group() const { return sigma_.group(); }
  const F& field() const { return field_; }
  const Endomorphism& sigma() const { return sigma_; }
  const Endomorphism& tau() const { return tau_; }
  bool is_sigma_derivation() const { return sigma_ == tau_; }
  Provenance provenance() const { return provenance_; }
  const std::optional<Ring>& witness() const { return witness_; }
  const std::vector<Ring>& table() const { return table_; }

  const Ring& operator()(Element g) const { return table_.at(g); }
  Ring operator()(const Ring& a) const {
    Ring out(group_ptr(), field_);
    for (Element g : a.support()) out += a.coeff(g) * table_[g];
    return out;
  }

  Vector<F> flatten() const {
    Vector<F> v;
    v.reserve(table_.size() * table_.size());
    for (const auto& r : table_) v.insert(v.end(), r.coeffs().begin(), r.coeffs().end());
    return v;
  }

  // x -> g * D(x)
  TwistedDerivation left_multiply(Element g) const {
    std::vector<Ring> t;
    for (const auto& r : table_) t.push_back(r.translate(g, group().identity()));
    return TwistedDerivation(sigma_, tau_, field_, std::move(t), provenance_);
  }

  bool is_zero() const {
    for (const auto& r : table_)
      if (!r.is_zero()) return false;
    return true;
  }

 private:
  Endomorphism sigma_;
  Endomorphism tau_;
  F field_;
  std::vector<Ring> table_;
  Provenance provenance_;
  std::optional<Ring> witness_;
};

// The map f: X -> FG on generators, indexed like the group's generator list.
template <ExactField F>
struct GeneratorMap {
  GroupPtr group;
  std::vector<GroupRingElement<F>> images;
};

// f~(w) is a sum of terms sign * left * f(generator) * right.
struct FreeTerm {
  int sign;
  std::uint32_t generator;
  Element left;
  Element right;
};
std::vector<FreeTerm> free_expansion(const Endomorphism& sigma, const Endomorphism& tau, const Word& w);

template <ExactField F>
GroupRingElement<F> free_eval(const GeneratorMap<F>& f, const Endomorphism& sigma, const Endomorphism& tau,
                              const Word& w, const F& field) {
  GroupRingElement<F> out(f.group, field);
  for (const auto& t : free_expansion(sigma, tau, w)) {
    if (t.generator >= f.images.size()) throw SpecError("word uses a generator without an image");
    auto term = f.images[t.generator].translate(t.left, t.right);
    if (t.sign > 0) out += term;
    else out -= term;
  }
  return out;
}

struct Verification {
  std::optional<std::pair<Element, Element>> violation;
  bool ok() const { return !violation; }
  explicit operator bool() const { return ok(); }
};

template <ExactField F>
Verification verify_derivation(const TwistedDerivation<F>& d) {
  const auto& G = d.group();
  const std::size_t n = G.order();
  Vector<F> scratch;
  for (Element g = 0; g < n; ++g) {
    const auto& dg = d(g).coeffs();
    const Element sg = d.sigma()(g);
    for (Element h = 0; h < n; ++h) {
      const auto& dh = d(h).coeffs();
      const Element th = d.tau()(h);
      scratch = d(G.mul(g, h)).coeffs();
      for (Element k = 0; k < n; ++k) {
        if (!is_zero(dg[k])) scratch[G.mul(k, th)] -= dg[k];
        if (!is_zero(dh[k])) scratch[G.mul(sg, k)] -= dh[k];
      }
      if (!is_zero_vector<F>(scratch)) return {std::make_pair(g, h)};
    }
  }
  return {};
}

template <ExactField F>
Expected<TwistedDerivation<F>> extend_from_generators(const GeneratorMap<F>& f, const Endomorphism& sigma,
                                                      const Endomorphism& tau, const F& field) {
  const auto& G = *f.group;
  if (f.images.size() != G.generator_count())
    throw SpecError("generator map needs one image per generator");
  if (sigma.group_ptr() != f.group || tau.group_ptr() != f.group)
    throw DomainError("endomorphisms act on a different group");
  for (const auto& y : G.relators()) {
    auto v = free_eval(f, sigma, tau, y, field);
    if (!v.is_zero())
      return Rejection{"relator " + G.format_word(y) + " not annihilated",
                       "f~(" + G.format_word(y) + ") = " + format_element(v)};
  }
  std::vector<GroupRingElement<F>> table;
  for (Element g = 0; g < G.order(); ++g) table.push_back(free_eval(f, sigma, tau, G.normal_form(g), field));
  TwistedDerivation<F> d(sigma, tau, field, std::move(table), Provenance::extended);
  if (auto v = verify_derivation(d); !v)
    return Rejection{"product rule fails",
                     "at (" + G.name(v.violation->first) + ", " + G.name(v.violation->second) + ")"};
  return d;
}

template <ExactField F>
struct DerivationSpace {
  std::size_t dimension = 0;
  std::vector<TwistedDerivation<F>> basis;
};

// Linear system of the relator criterion: columns are generator-image
// coefficients (generator i, element u) -> i*n + u.
template <ExactField F>
Matrix<F> relator_system(const Endomorphism& sigma, const Endomorphism& tau, const F& field) {
  const auto& G = sigma.group();
  const std::size_t n = G.order();
  const auto& rel = G.relators();
  Matrix<F> m(field, rel.size() * n, G.generator_count() * n);
  const auto one = field.one();
  for (std::size_t r = 0; r < rel.size(); ++r)
    for (const auto& t : free_expansion(sigma, tau, rel[r]))
      for (Element u = 0; u < n; ++u) {
        auto& cell = m(r * n + G.mul(G.mul(t.left, u), t.right), t.generator * n + u);
        if (t.sign > 0) cell += one;
        else cell -= one;
      }
  return m;
}

template <ExactField F>
DerivationSpace<F> derivation_space(const Endomorphism& sigma, const Endomorphism& tau, const F& field) {
  const auto& gp = sigma.group_ptr();
  const std::size_t n = gp->order();
  DerivationSpace<F> out;
  for (const auto& v : kernel_basis(relator_system(sigma, tau, field))) {
    GeneratorMap<F> f{gp, {}};
    for (std::size_t i = 0; i < gp->generator_count(); ++i)
      f.images.emplace_back(gp, field, Vector<F>(v.begin() + i * n, v.begin() + (i + 1) * n));
    auto d = extend_from_generators(f, sigma, tau, field);
    if (!d) throw DomainError("internal: kernel vector rejected: " + d.rejection().detail);
    out.basis.emplace_back(sigma, tau, field, d->table(), Provenance::solver);
  }
  out.dimension = out.basis.size();
  return out;
}

template <ExactField F>
std::vector<GroupRingElement<F>> inner_table(const GroupRingElement<F>& beta, const Endomorphism& sigma,
                                             const Endomorphism& tau) {
  const auto& G = beta.group();
  std::vector<GroupRingElement<F>> t;
  for (Element g = 0; g < G.order(); ++g)
    t.push_back(beta.translate(G.identity(), tau(g)) - beta.translate(sigma(g), G.identity()));
  return t;
}

template <ExactField F>
TwistedDerivation<F> inner_derivation(const GroupRingElement<F>& beta, const Endomorphism& sigma,
                                      const Endomorphism& tau) {
  if (beta.group_ptr() != sigma.group_ptr()) throw DomainError("beta lives over a different group");
  return TwistedDerivation<F>(sigma, tau, beta.field(), inner_table(beta, sigma, tau), Provenance::inner, beta);
}

// Some beta with D = D_beta, or nullopt when D is outer.
template <ExactField F>
std::optional<GroupRingElement<F>> is_inner(const TwistedDerivation<F>& d) {
  const auto& G = d.group();
  const std::size_t n = G.order();
  Matrix<F> m(d.field(), n * n, n);
  const auto one = d.field().one();
  for (Element g = 0; g < n; ++g)
    for (Element u = 0; u < n; ++u) {
      m(g * n + G.mul(u, d.tau()(g)), u) += one;
      m(g * n + G.mul(d.sigma()(g), u), u) -= one;
    }
  auto x = solve(m, d.flatten());
  if (!x) return std::nullopt;
  return GroupRingElement<F>(d.group_ptr(), d.field(), std::move(*x));
}

// Unital algebra endomorphism of FG given by the images of the group basis.
template <ExactField F>
class AlgebraEndomorphism {
 public:
  using Ring = GroupRingElement<F>;

  // Row g of m is the coefficient vector of the image of g.
  static Expected<AlgebraEndomorphism> from_matrix(GroupPtr g, F field, const Matrix<F>& m) {
    const std::size_t n = g->order();
    if (m.rows() != n || m.cols() != n) throw SpecError("algebra endomorphism matrix must be |G| x |G|");
    AlgebraEndomorphism a;
    a.group_ = g;
    a.field_.emplace(field);
    for (Element x = 0; x < n; ++x) a.images_.emplace_back(g, field, m.row_vector(x));
    if (!(a.images_[g->identity()] == Ring::one(g, field)))
      return Rejection{"not unital", "image of 1 is " + format_element(a.images_[g->identity()])};
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (!(a.images_[g->mul(x, y)] == a.images_[x] * a.images_[y]))
          return Rejection{"not multiplicative", "fails on (" + g->name(x) + ", " + g->name(y) + ")"};
    return a;
  }

  static AlgebraEndomorphism induced(const Endomorphism& s, F field) {
    AlgebraEndomorphism a;
    a.group_ = s.group_ptr();
    a.field_.emplace(field);
    for (Element x = 0; x < s.group().order(); ++x) a.images_.push_back(Ring::basis(a.group_, field, s(x)));
    return a;
  }

  const GroupPtr& group_ptr() const { return group_; }
  const F& field() const { return *field_; }
  const Ring& operator()(Element g) const { return images_.at(g); }
  Ring operator()(const Ring& a) const {
    Ring out(group_, *field_);
    for (Element g : a.support()) out += a.coeff(g) * images_[g];
    return out;
  }

 private:
  AlgebraEndomorphism() = default;
  GroupPtr group_;
  std::optional<F> field_;
  std::vector<Ring> images_;
};

template <ExactField F>
std::vector<GroupRingElement<F>> inner_table(const GroupRingElement<F>& beta, const AlgebraEndomorphism<F>& sigma,
                                             const AlgebraEndomorphism<F>& tau) {
  std::vector<GroupRingElement<F>> t;
  for (Element g = 0; g < beta.group().order(); ++g) t.push_back(beta * tau(g) - sigma(g) * beta);
  return t;
}

// First pair (g,h) where D(gh) != D(g)tau(h) + sigma(g)D(h).
template <ExactField F>
std::optional<std::pair<Element, Element>> product_rule_violation(const std::vector<GroupRingElement<F>>& table,
                                                                  const AlgebraEndomorphism<F>& sigma,
                                                                  const AlgebraEndomorphism<F>& tau) {
  const auto& G = *sigma.group_ptr();
  for (Element g = 0; g < G.order(); ++g)
    for (Element h = 0; h < G.order(); ++h)
      if (!(table[G.mul(g, h)] == table[g] * tau(h) + sigma(g) * table[h])) return std::make_pair(g, h);
  return std::nullopt;
}

inline void require_invertible_order(std::size_t order, std::uint32_t characteristic, const std::string& field) {
  if (characteristic != 0 && order % characteristic == 0)
    throw DomainError("|G| = " + std::to_string(order) + " is zero in " + field +
                      "; averaging needs the characteristic not to divide |G|");
}

// gamma = (1/|G|) sum_g D(g^-1) tau(g)
template <ExactField F>
GroupRingElement<F> averaging_witness(const std::vector<GroupRingElement<F>>& table,
                                      const AlgebraEndomorphism<F>& tau) {
  const auto& G = *tau.group_ptr();
  const F& field = tau.field();
  require_invertible_order(G.order(), field.characteristic(), field.name());
  GroupRingElement<F> gamma(tau.group_ptr(), field);
  for (Element g = 0; g < G.order(); ++g) gamma += table[G.inverse(g)] * tau(g);
  return inverse(field.from_int(static_cast<std::int64_t>(G.order()))) * gamma;
}

template <ExactField F>
GroupRingElement<F> averaging_witness(const TwistedDerivation<F>& d) {
  const auto& G = d.group();
  require_invertible_order(G.order(), d.field().characteristic(), d.field().name());
  GroupRingElement<F> gamma(d.group_ptr(), d.field());
  for (Element g = 0; g < G.order(); ++g) gamma += d(G.inverse(g)).translate(G.identity(), d.tau()(g));
  return inverse(d.field().from_int(static_cast<std::int64_t>(G.order()))) * gamma;
}

// Extends values on a generating set along a BFS tree with
// D(g*y) = D(g)tau(y) + sigma(g)D(y). The result is not verified.
template <ExactField F>
std::vector<GroupRingElement<F>> extend_along_tree(const std::vector<Element>& gens,
                                                   const std::vector<GroupRingElement<F>>& values,
                                                   const Endomorphism& sigma, const Endomorphism& tau,
                                                   const F& field) {
  const auto& gp = sigma.group_ptr();
  const auto& G = *gp;
  std::vector<std::optional<GroupRingElement<F>>> t(G.order());
  t[G.identity()].emplace(gp, field);
  std::vector<Element> queue{G.identity()};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Element g = queue[q];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Element h = G.mul(g, gens[i]);
      if (t[h]) continue;
      t[h].emplace(t[g]->translate(G.identity(), tau(gens[i])) + values[i].translate(sigma(g), G.identity()));
      queue.push_back(h);
    }
  }
  if (queue.size() != G.order()) throw DomainError("generating set does not generate the group");
  std::vector<GroupRingElement<F>> out;
  for (auto& x : t) out.push_back(std::move(*x));
  return out;
}

// Basis {g * D_i} of sigma-derivations of F G for abelian G over GF(p).
Expected<std::vector<TwistedDerivation<PrimeField>>> abelian_basis(const GroupPtr& g, const Endomorphism& sigma,
                                                                   const PrimeField& field);

// D(x^k) = k sigma(x)^(k-1) v on a cyclic group, verified.
template <ExactField F>
Expected<TwistedDerivation<F>> cyclic_power_derivation(const Endomorphism& sigma, const GroupRingElement<F>& v) {
  const auto& gp = sigma.group_ptr();
  const auto& G = *gp;
  if (G.family() != GroupFamily::cyclic) throw DomainError("cyclic_power_derivation needs a cyclic group");
  if (v.group_ptr() != gp) throw DomainError("seed lives over a different group");
  const Element x = G.generator(0);
  const Element sx = sigma(x);
  std::vector<GroupRingElement<F>> table;
  table.emplace_back(gp, v.field());
  for (std::size_t k = 1; k < G.order(); ++k) {
    const Element xk = G.power(x, static_cast<std::int64_t>(k));
    if (xk != static_cast<Element>(table.size())) throw DomainError("cyclic listing out of order");
    const auto c = v.field().from_int(static_cast<std::int64_t>(k));
    table.push_back(c * v.translate(G.power(sx, static_cast<std::int64_t>(k) - 1), G.identity()));
  }
  TwistedDerivation<F> d(sigma, sigma, v.field(), std::move(table), Provenance::power_formula);
  if (auto ver = verify_derivation(d); !ver) {
    // Closing the cycle needs n * sigma(x)^(n-1) * v = 0.
    const auto nv = v.field().from_int(static_cast<std::int64_t>(G.order())) * v;
    return Rejection{"power formula is not a derivation",
                     "product rule fails at (" + G.name(ver.violation->first) + ", " +
                         G.name(ver.violation->second) + "); n*v = " + format_element(nv)};
  }
  return d;
}

}  // namespace tder
