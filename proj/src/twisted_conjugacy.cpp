#include "tder/twisted_conjugacy.hpp"

#include <algorithm>

namespace tder {

ConjugacyPartition twisted_classes(const Endomorphism& sigma, const Endomorphism& tau) {
  if (sigma.group_ptr() != tau.group_ptr()) throw DomainError("sigma and tau act on different groups");
  const auto& G = sigma.group();
  const std::size_t n = G.order();
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(n, unassigned);
  std::vector<std::vector<Element>> orbits;
  for (Element x = 0; x < n; ++x) {
    if (label[x] != unassigned) continue;
    std::vector<bool> in(n, false);
    for (Element g = 0; g < n; ++g) in[G.mul(G.mul(sigma(g), x), G.inverse(tau(g)))] = true;
    std::vector<Element> orbit;
    for (Element y = 0; y < n; ++y)
      if (in[y]) {
        orbit.push_back(y);
        label[y] = orbits.size();
      }
    orbits.push_back(std::move(orbit));
  }

  ConjugacyPartition p;
  p.group = sigma.group_ptr();
  for (const auto& o : orbits)
    if (o.size() == 1) p.classes.push_back(o);
  p.singleton_count = p.classes.size();
  for (const auto& o : orbits)
    if (o.size() > 1) p.classes.push_back(o);
  p.class_of.assign(n, 0);
  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    p.representatives.push_back(p.classes[i].front());
    for (Element g : p.classes[i]) p.class_of[g] = i;
  }
  return p;
}

std::vector<Element> twisted_centralizer(const Endomorphism& sigma, const Endomorphism& tau, Element x) {
  const auto& G = sigma.group();
  std::vector<Element> out;
  for (Element g = 0; g < G.order(); ++g)
    if (G.mul(x, tau(g)) == G.mul(sigma(g), x)) out.push_back(g);
  return out;
}

std::vector<Element> twisted_center_group(const Endomorphism& sigma, const Endomorphism& tau) {
  const auto& G = sigma.group();
  std::vector<Element> out;
  for (Element z = 0; z < G.order(); ++z) {
    bool central = true;
    for (Element g = 0; g < G.order() && central; ++g) central = G.mul(z, tau(g)) == G.mul(sigma(g), z);
    if (central) out.push_back(z);
  }
  return out;
}

}  // namespace tder
