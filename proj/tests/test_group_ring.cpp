#include <random>

#include "doctest.h"
#include "support/grid.hpp"
#include "support/oracles.hpp"
#include "tder/dihedral_forms.hpp"

using namespace tder;

namespace {

template <ExactField F>
GroupRingElement<F> el(const GroupPtr& g, const F& f, const char* s) {
  return parse_element(g, f, s);
}

template <ExactField F>
void ring_axioms(const GroupPtr& g, const F& f, std::mt19937_64& rng) {
  const auto one = GroupRingElement<F>::one(g, f);
  for (int i = 0; i < 10; ++i) {
    const auto a = oracle::random_element(g, f, rng), b = oracle::random_element(g, f, rng),
               c = oracle::random_element(g, f, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(one * a == a);
    CHECK(a * one == a);
    CHECK(a - a == GroupRingElement<F>(g, f));
  }
}

// Convolution computed from the definition, sum over all pairs.
template <ExactField F>
GroupRingElement<F> convolve(const GroupRingElement<F>& a, const GroupRingElement<F>& b) {
  const auto& G = a.group();
  GroupRingElement<F> out(a.group_ptr(), a.field());
  for (Element x = 0; x < G.order(); ++x)
    for (Element y = 0; y < G.order(); ++y) out.add_to(G.mul(x, y), a.coeff(x) * b.coeff(y));
  return out;
}

}  // namespace

TEST_CASE("parse and format") {
  const auto g = make_dihedral(6);
  const PrimeField f2(2);
  const RationalField q;
  CHECK(format_element(el(g, f2, "1 + a + a^3*b")) == "1 + a + a^3*b");
  CHECK(format_element(el(g, f2, "a + a")) == "0");
  CHECK(format_element(el(g, q, "2*a - 1/2*b + 3")) == "3 + 2*a - 1/2*b");
  CHECK(format_element(el(g, q, "-a^-1")) == "-a^5");
  CHECK(el(g, q, "a*b") == el(g, q, "b*a^5"));
  CHECK_THROWS_AS(el(g, q, "1 +"), SpecError);
  CHECK_THROWS_AS(el(g, q, "c"), SpecError);
  const auto c = make_cyclic(18);
  CHECK(format_element(el(c, f2, "2*x^5 + x")) == "x");
}

TEST_CASE("multiplication examples") {
  const PrimeField f2(2);
  const auto c18 = make_cyclic(18);
  CHECK(el(c18, f2, "x") * el(c18, f2, "1 + x") == el(c18, f2, "x + x^2"));
  const auto d6 = make_dihedral(3);
  CHECK(el(d6, f2, "b") * el(d6, f2, "a") == el(d6, f2, "a^2*b"));
  const auto other = make_dihedral(3);
  CHECK_THROWS_AS(el(d6, f2, "a") + el(other, f2, "a"), DomainError);
  CHECK_THROWS_AS(el(d6, f2, "a") + el(d6, PrimeField(3), "a"), DomainError);
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937_64 rng(1);
  for (const auto& g : {make_dihedral(3), make_dihedral(6), make_cyclic(12), make_abelian({2, 4}), make_dihedral(12)}) {
    ring_axioms(g, PrimeField(2), rng);
    ring_axioms(g, PrimeField(3), rng);
    ring_axioms(g, PrimeField(7), rng);
    ring_axioms(g, RationalField{}, rng);
  }
}

TEST_CASE("product equals the defining convolution") {
  std::mt19937_64 rng(2);
  const auto g = make_dihedral(5);
  const RationalField q;
  for (int i = 0; i < 20; ++i) {
    const auto a = oracle::random_element(g, q, rng), b = oracle::random_element(g, q, rng);
    CHECK(a * b == convolve(a, b));
  }
}

TEST_CASE("apply_endo") {
  const auto g = make_dihedral(6);
  const PrimeField f2(2);
  const auto s = *endo_from_images(g, std::map<std::string, std::string>{{"a", "a^2"}, {"b", "a*b"}});
  CHECK(apply_endo(identity_endomorphism(g), el(g, f2, "a + b")) == el(g, f2, "a + b"));
  CHECK(apply_endo(s, el(g, f2, "a + b")) == el(g, f2, "a^2 + a*b"));

  std::mt19937_64 rng(4);
  const RationalField q;
  for (const auto& e : enumerate_endomorphisms(g)) {
    const auto a = oracle::random_element(g, q, rng), b = oracle::random_element(g, q, rng);
    CHECK(apply_endo(e, a * b) == apply_endo(e, a) * apply_endo(e, b));
    // term by term
    GroupRingElement<RationalField> t(g, q);
    for (Element x : a.support()) t += a.coeff(x) * GroupRingElement<RationalField>::basis(g, q, e(x));
    CHECK(apply_endo(e, a) == t);
  }
}

TEST_CASE("centralizer examples") {
  const PrimeField f2(2);
  const auto d12 = make_dihedral(6);
  const auto z = el(d12, f2, "a^3");
  CHECK(centralizer_basis(z).size() == 12);
  CHECK(centralizer_basis(el(d12, f2, "a*b")).size() == 8);
  const auto d6 = make_dihedral(3);
  CHECK(centralizer_basis(el(d6, f2, "b")).size() == 4);
  for (const auto& c : {el(d12, f2, "a*b"), el(d12, f2, "1 + a + b")}) {
    const auto basis = centralizer_basis(c);
    CHECK(span_rank(basis, d12, f2) == basis.size());
    // contains 1 and is closed under products
    auto with_one = basis;
    with_one.push_back(GroupRingElement<PrimeField>::one(d12, f2));
    CHECK(span_rank(with_one, d12, f2) == basis.size());
    for (const auto& x : basis)
      for (const auto& y : basis) {
        auto ext = basis;
        ext.push_back(x * y);
        CHECK(span_rank(ext, d12, f2) == basis.size());
      }
  }
}

TEST_CASE("anticentralizer examples") {
  const RationalField q;
  const auto d6 = make_dihedral(3);
  CHECK(anticentralizer_basis(GroupRingElement<RationalField>::one(d6, q)).empty());
  const auto k = anticentralizer_basis(el(d6, q, "b"));
  CHECK(k.size() == 2);
  CHECK(same_span(k, {el(d6, q, "a - a^2"), el(d6, q, "a*b - a^2*b")}, d6, q));
  const PrimeField f2(2);
  const auto d12 = make_dihedral(6);
  for (const char* b : {"b", "a*b + a^2", "1 + a^3*b"})
    CHECK(same_span(anticentralizer_basis(el(d12, f2, b)), centralizer_basis(el(d12, f2, b)), d12, f2));
}

TEST_CASE("centralizer of a group element matches the group centralizer when all of G commutes") {
  // In an abelian group every g commutes with everything.
  const auto g = make_abelian({3, 4});
  const PrimeField f(5);
  for (Element x = 0; x < g->order(); ++x)
    CHECK(centralizer_basis(GroupRingElement<PrimeField>::basis(g, f, x)).size() == g->order());
  // Basis elements of a non-abelian group: the centralizer contains each
  // commuting group element.
  const auto d = make_dihedral(4);
  for (Element x = 0; x < d->order(); ++x) {
    const auto basis = centralizer_basis(GroupRingElement<PrimeField>::basis(d, f, x));
    for (Element y = 0; y < d->order(); ++y) {
      auto ext = basis;
      ext.push_back(GroupRingElement<PrimeField>::basis(d, f, y));
      CHECK((span_rank(ext, d, f) == basis.size()) == d->commute(x, y));
    }
  }
}

TEST_CASE("explicit bases span the kernels on the grid") {
  for (const auto& pt : grid::points())
    for (const auto& af : grid::fields())
      std::visit(
          [&](const auto& f) {
            const auto par = *pt.sigma.dihedral_params();
            const bool c2 = f.characteristic() == 2;
            for (auto w : c2 ? std::vector{LemmaBasis::centralizer_b, LemmaBasis::centralizer_ab}
                             : std::vector{LemmaBasis::anticentralizer_b, LemmaBasis::anticentralizer_ab}) {
              const auto beta = lemma_target(pt.group, f, par, w);
              const auto kernel = c2 ? centralizer_basis(beta) : anticentralizer_basis(beta);
              CHECK(same_span(lemma_bases(pt.group, f, par, w), kernel, pt.group, f));
            }
          },
          af);
}
