#pragma once

#include <string>
#include <vector>

#include "tder/group_ring.hpp"

namespace tder {

struct BranchValue {
  std::size_t value = 0;
  std::string label;
};

struct PredictedClass {
  std::string description;
  std::vector<Element> members;  // indices in the dihedral listing
};

struct DihedralPrediction {
  DihedralEndoParams params;
  std::uint32_t characteristic = 0;
  BranchValue dim_derivations;
  std::size_t dim_inner = 0;
  std::size_t class_count = 0;
  std::vector<PredictedClass> classes;
  bool outer_nonzero = false;
};

// Closed forms cover every a -> a^s, b -> a^t b (families s0, s1 and s3).
// Anything else is rejected as "no closed form".
bool has_closed_form(std::uint32_t n, DihedralFamily family);

Expected<BranchValue> predict_dim_derivations(std::uint32_t n, std::uint32_t characteristic, DihedralFamily family,
                                              const DihedralEndoParams& p);
Expected<std::vector<PredictedClass>> predict_classes(std::uint32_t n, DihedralFamily family,
                                                      const DihedralEndoParams& p);
Expected<std::size_t> predict_dim_inner(std::uint32_t n, DihedralFamily family, const DihedralEndoParams& p);
bool predict_outer(std::uint32_t n, std::uint32_t characteristic);

Expected<DihedralPrediction> predict(const Endomorphism& sigma, std::uint32_t characteristic);

enum class LemmaBasis { anticentralizer_b, anticentralizer_ab, centralizer_b, centralizer_ab };
std::string to_string(LemmaBasis w);
LemmaBasis parse_lemma_basis(std::string_view s);

// The element beta whose (anti)centralizer the basis describes:
// sigma(b) = a^t b, or sigma(ab) = a^(s+t) b.
template <ExactField F>
GroupRingElement<F> lemma_target(const GroupPtr& g, const F& field, const DihedralEndoParams& p, LemmaBasis w) {
  const bool ab = w == LemmaBasis::anticentralizer_ab || w == LemmaBasis::centralizer_ab;
  return GroupRingElement<F>::basis(g, field, g->reflection(ab ? p.s + p.t : p.t));
}

template <ExactField F>
std::vector<GroupRingElement<F>> lemma_bases(const GroupPtr& g, const F& field, const DihedralEndoParams& p,
                                             LemmaBasis w) {
  const std::int64_t n = g->dihedral_n();
  const bool anti = w == LemmaBasis::anticentralizer_b || w == LemmaBasis::anticentralizer_ab;
  const bool char2 = field.characteristic() == 2;
  if (anti && char2) throw DomainError("anticentralizer closed form needs characteristic != 2");
  if (!anti && !char2) throw DomainError("centralizer closed form needs characteristic 2");
  const bool ab = w == LemmaBasis::anticentralizer_ab || w == LemmaBasis::centralizer_ab;
  const std::int64_t c = ab ? std::int64_t(p.s) + p.t : p.t;

  using R = GroupRingElement<F>;
  auto rot = [&](std::int64_t i) { return R::basis(g, field, g->rotation(i)); };
  auto refl = [&](std::int64_t i) { return R::basis(g, field, g->reflection(i)); };
  const auto sign = anti ? -field.one() : field.one();

  std::vector<R> out;
  if (!anti) {
    out.push_back(rot(0));
    if (n % 2 == 0) out.push_back(rot(n / 2));
    out.push_back(refl(c));
    if (n % 2 == 0) out.push_back(refl(c + n / 2));
  }
  const std::int64_t top = anti ? (n - 1) / 2 : (n % 2 ? (n - 1) / 2 : n / 2 - 1);
  for (std::int64_t i = 1; i <= top; ++i) {
    out.push_back(rot(i) + sign * rot(-i));
    // a^c (a^i +- a^-i) b
    out.push_back(refl(c + i) + sign * refl(c - i));
  }
  return out;
}

}  // namespace tder
