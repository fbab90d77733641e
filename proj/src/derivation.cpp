#include "tder/derivation.hpp"

namespace tder {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::extended: return "extended";
    case Provenance::inner: return "inner";
    case Provenance::solver: return "solver";
    case Provenance::power_formula: return "power-formula";
  }
  return "unknown";
}

std::vector<FreeTerm> free_expansion(const Endomorphism& sigma, const Endomorphism& tau, const Word& w) {
  const auto& G = sigma.group();
  const Word letters = expand(w);
  const std::size_t m = letters.size();
  for (const auto& l : letters)
    if (l.generator >= G.generator_count()) throw SpecError("word uses unknown generator index");

  auto image = [&](const Endomorphism& e, const Letter& l) {
    const Element x = e(G.generator(l.generator));
    return l.exponent > 0 ? x : G.inverse(x);
  };
  // suffix[i] = tau(x_{i+1}) ... tau(x_m)
  std::vector<Element> suffix(m + 1, G.identity());
  for (std::size_t i = m; i-- > 0;) suffix[i] = G.mul(image(tau, letters[i]), suffix[i + 1]);

  std::vector<FreeTerm> terms;
  Element prefix = G.identity();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& l = letters[i];
    const Element right = suffix[i + 1];
    if (l.exponent > 0) {
      terms.push_back({1, l.generator, prefix, right});
    } else {
      // f~(y^-1) = -sigma(y)^-1 f(y) tau(y)^-1
      const Element y = G.generator(l.generator);
      terms.push_back({-1, l.generator, G.mul(prefix, G.inverse(sigma(y))), G.mul(G.inverse(tau(y)), right)});
    }
    prefix = G.mul(prefix, image(sigma, l));
  }
  return terms;
}

Expected<std::vector<TwistedDerivation<PrimeField>>> abelian_basis(const GroupPtr& g, const Endomorphism& sigma,
                                                                   const PrimeField& field) {
  if (!g->is_abelian()) throw DomainError("abelian_basis needs an abelian group, got " + g->description());
  if (g->family() != GroupFamily::cyclic && g->family() != GroupFamily::abelian)
    throw DomainError("abelian_basis needs a cyclic or abelian-product group");
  if (sigma.group_ptr() != g) throw DomainError("endomorphism acts on a different group");
  const std::uint32_t p = field.characteristic();
  const auto& factors = g->parameters();

  // Split each cyclic factor C_{p^a m} as C_{p^a} x C_m.
  std::vector<Element> k_gens, h_gens;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::uint32_t q = 1, m = factors[i];
    while (m % p == 0) {
      m /= p;
      q *= p;
    }
    const Element x = g->generator(i);
    if (q > 1) k_gens.push_back(g->power(x, m));
    if (m > 1) h_gens.push_back(g->power(x, q));
  }
  std::vector<Element> gens = k_gens;
  gens.insert(gens.end(), h_gens.begin(), h_gens.end());

  std::vector<TwistedDerivation<PrimeField>> basis;
  for (std::size_t i = 0; i < k_gens.size(); ++i) {
    std::vector<GroupRingElement<PrimeField>> values;
    for (std::size_t j = 0; j < gens.size(); ++j)
      values.push_back(j == i ? GroupRingElement<PrimeField>::one(g, field) : GroupRingElement<PrimeField>(g, field));
    TwistedDerivation<PrimeField> di(sigma, sigma, field, extend_along_tree(gens, values, sigma, sigma, field),
                                     Provenance::extended);
    if (auto v = verify_derivation(di); !v)
      return Rejection{"D_" + std::to_string(i + 1) + " fails verification",
                       "product rule fails at (" + g->name(v.violation->first) + ", " +
                           g->name(v.violation->second) + ") for sigma " + sigma.describe()};
    for (Element x = 0; x < g->order(); ++x) basis.push_back(di.left_multiply(x));
  }
  return basis;
}

}  // namespace tder
