#pragma once

#include <vector>

#include "tder/derivation.hpp"

namespace tder {

struct ConjugacyPartition {
  GroupPtr group;
  // Singleton classes first, then the rest; each block ordered by representative.
  std::vector<std::vector<Element>> classes;
  std::vector<Element> representatives;
  std::size_t singleton_count = 0;
  std::size_t count() const { return classes.size(); }
  // Index of the class containing g.
  std::vector<std::size_t> class_of;
};

// Orbits of x -> sigma(g) x tau(g)^-1.
ConjugacyPartition twisted_classes(const Endomorphism& sigma, const Endomorphism& tau);

// {g : x tau(g) = sigma(g) x}
std::vector<Element> twisted_centralizer(const Endomorphism& sigma, const Endomorphism& tau, Element x);

// {z : z tau(g) = sigma(g) z for all g}
std::vector<Element> twisted_center_group(const Endomorphism& sigma, const Endomorphism& tau);

template <ExactField F>
std::vector<GroupRingElement<F>> class_sums(const ConjugacyPartition& p, const F& field) {
  std::vector<GroupRingElement<F>> out;
  for (const auto& c : p.classes) {
    GroupRingElement<F> s(p.group, field);
    for (Element g : c) s.add_to(g, field.one());
    out.push_back(std::move(s));
  }
  return out;
}

// Kernel of z -> (z tau(g) - sigma(g) z)_g, the twisted center of FG.
template <ExactField F>
std::vector<GroupRingElement<F>> twisted_center_kernel(const Endomorphism& sigma, const Endomorphism& tau,
                                                       const F& field) {
  const auto& G = sigma.group();
  const std::size_t n = G.order();
  Matrix<F> m(field, n * n, n);
  for (Element g = 0; g < n; ++g)
    for (Element u = 0; u < n; ++u) {
      m(g * n + G.mul(u, tau(g)), u) += field.one();
      m(g * n + G.mul(sigma(g), u), u) -= field.one();
    }
  return elements_from_vectors(sigma.group_ptr(), field, kernel_basis(m));
}

// {D_g : g in a non-singleton class, g not its representative}
template <ExactField F>
std::vector<TwistedDerivation<F>> inner_basis(const Endomorphism& sigma, const Endomorphism& tau, const F& field) {
  const auto p = twisted_classes(sigma, tau);
  std::vector<TwistedDerivation<F>> out;
  for (std::size_t i = p.singleton_count; i < p.count(); ++i)
    for (Element g : p.classes[i])
      if (g != p.representatives[i])
        out.push_back(inner_derivation(GroupRingElement<F>::basis(p.group, field, g), sigma, tau));
  return out;
}

template <ExactField F>
std::size_t derivation_rank(const std::vector<TwistedDerivation<F>>& ds, const GroupPtr& g, const F& field) {
  RowEchelon<F> e(field, g->order() * g->order());
  for (const auto& d : ds) e.insert(d.flatten());
  return e.rank();
}

}  // namespace tder
