#include <set>

#include "doctest.h"
#include "tder/group.hpp"

using namespace tder;

namespace {

void check_group_laws(const FiniteGroup& G) {
  const auto n = G.order();
  for (Element g = 0; g < n; ++g) {
    CHECK(G.mul(g, G.identity()) == g);
    CHECK(G.mul(G.identity(), g) == g);
    CHECK(G.mul(g, G.inverse(g)) == G.identity());
    CHECK(G.evaluate(G.normal_form(g)) == g);
    CHECK(n % G.element_order(g) == 0);
    for (Element h = 0; h < n; ++h)
      for (Element k = 0; k < n; ++k) REQUIRE(G.mul(G.mul(g, h), k) == G.mul(g, G.mul(h, k)));
  }
  for (const auto& r : G.relators()) CHECK(G.evaluate(r) == G.identity());
}

}  // namespace

TEST_CASE("built-in families satisfy the group laws") {
  check_group_laws(*make_cyclic(18));
  check_group_laws(*make_dihedral(3));
  check_group_laws(*make_dihedral(6));
  check_group_laws(*make_abelian({9, 2}));
  check_group_laws(*make_abelian({2, 2, 3}));
}

TEST_CASE("cyclic listing") {
  const auto g = make_cyclic(18);
  CHECK(g->order() == 18);
  CHECK(g->name(0) == "1");
  CHECK(g->name(1) == "x");
  CHECK(g->name(17) == "x^17");
  CHECK(g->mul(5, 15) == 2);
  CHECK(g->relators().size() == 1);
}

TEST_CASE("dihedral listing 1, a, ..., a^(n-1), b, ab, ...") {
  const auto g = make_dihedral(6);
  CHECK(g->order() == 12);
  CHECK(g->name(1) == "a");
  CHECK(g->name(6) == "b");
  CHECK(g->name(8) == "a^2*b");
  CHECK(g->parse_element("a^2*b") == 8);
  CHECK(g->parse_element("b*a") == g->parse_element("a^5*b"));
  CHECK(g->element_order(g->parse_element("a")) == 6);
  CHECK(g->element_order(g->identity()) == 1);
  CHECK(g->relators().size() == 3);
  CHECK(g->description() == "D12");
  CHECK_THROWS_AS(make_dihedral(2), SpecError);
}

TEST_CASE("dihedral(3) is non-abelian of order 6") {
  const auto g = make_dihedral(3);
  CHECK(g->order() == 6);
  CHECK_FALSE(g->is_abelian());
}

TEST_CASE("abelian(9,2) has order 18 and two generators") {
  const auto g = make_abelian({9, 2});
  CHECK(g->order() == 18);
  CHECK(g->generator_count() == 2);
  CHECK(g->is_abelian());
  CHECK(g->element_order(g->parse_element("x1*x2")) == 18);
}

TEST_CASE("order of a^s is n / gcd(n, s)") {
  for (std::uint32_t n = 3; n <= 12; ++n) {
    const auto g = make_dihedral(n);
    for (std::uint32_t s = 0; s < n; ++s) {
      std::size_t k = 1;
      Element x = g->rotation(s);
      while (x != g->identity()) x = g->mul(x, g->rotation(s)), ++k;
      CHECK(g->element_order(g->rotation(s)) == k);
      CHECK(dihedral_params(n, s, 0).m == k);
      CHECK(dihedral_params(n, s, 0).m * dihedral_params(n, s, 0).d == n);
    }
  }
}

TEST_CASE("word grammar") {
  const auto g = make_dihedral(4);
  CHECK(g->parse_element("1") == g->identity());
  CHECK(g->parse_element("a^-1") == g->parse_element("a^3"));
  CHECK(g->format_word(g->parse_word("a^2*b")) == "a^2*b");
  CHECK_THROWS_AS(g->parse_word("c"), SpecError);
  CHECK_THROWS_AS(g->parse_word("a^"), SpecError);
  CHECK_THROWS_AS(g->parse_word("a**b"), SpecError);
  CHECK(compress(expand(g->parse_word("a^3*b^-2"))) == g->parse_word("a^3*b^-2"));
  const auto w = g->parse_word("a*b*a^2");
  CHECK(g->mul(g->evaluate(w), g->evaluate(inverse_word(w))) == g->identity());
}

TEST_CASE("table groups") {
  // Klein four group with a non-identity first element.
  std::vector<std::string> names{"u", "e", "v", "w"};
  std::vector<std::vector<Element>> t{{1, 0, 3, 2}, {0, 1, 2, 3}, {3, 2, 1, 0}, {2, 3, 0, 1}};
  const auto g = make_table_group(names, t, {"u", "v"});
  CHECK(g->identity() == 1);
  check_group_laws(*g);
  CHECK_FALSE(g->relators().empty());

  auto bad = t;
  bad[2][3] = 2;
  CHECK_THROWS_AS(make_table_group(names, bad, {"u", "v"}), SpecError);
  CHECK_THROWS_AS(make_table_group(names, t, {"u"}), SpecError);
}

TEST_CASE("endomorphism from generator images") {
  const auto d12 = make_dihedral(6);
  auto s = endo_from_images(d12, std::map<std::string, std::string>{{"a", "a^2"}, {"b", "a*b"}});
  REQUIRE(s.ok());
  CHECK(s->dihedral_family() == DihedralFamily::s1);
  CHECK(s->dihedral_st() == std::pair<std::uint32_t, std::uint32_t>{2, 1});
  const auto p = *s->dihedral_params();
  CHECK(p.m == 3);
  CHECK(p.d == 2);
  CHECK(p.j0 == 1);
  CHECK(s->describe() == "a->a^2, b->a*b");

  const auto d6 = make_dihedral(3);
  const auto id = endo_from_images(d6, std::map<std::string, std::string>{{"a", "a"}, {"b", "b"}});
  REQUIRE(id.ok());
  CHECK(id->is_identity());

  const auto bad = endo_from_images(d6, std::map<std::string, std::string>{{"a", "a"}, {"b", "a"}});
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.rejection().detail.find("b^2") != std::string::npos);

  CHECK_THROWS_AS(endo_from_images(d6, std::map<std::string, std::string>{{"a", "a"}, {"c", "b"}}), SpecError);
}

TEST_CASE("dihedral endomorphism counts") {
  CHECK(enumerate_endomorphisms(make_dihedral(3)).size() == 10);
  CHECK(enumerate_endomorphisms(make_dihedral(4)).size() == 36);
  CHECK(enumerate_endomorphisms(make_dihedral(5)).size() == 26);
  CHECK(enumerate_endomorphisms(make_dihedral(6)).size() == 64);
  CHECK_THROWS_AS(enumerate_endomorphisms(make_cyclic(5)), DomainError);
}

TEST_CASE("enumeration agrees with brute force and every member is a homomorphism") {
  for (std::uint32_t n = 3; n <= 8; ++n) {
    const auto g = make_dihedral(n);
    const auto fam = enumerate_endomorphisms(g);
    const auto brute = enumerate_endomorphisms_brute(g);
    std::set<std::vector<Element>> a, b;
    for (const auto& e : fam) a.insert(e.image_table());
    for (const auto& e : brute) b.insert(e.image_table());
    CHECK(a.size() == fam.size());
    CHECK(a == b);
    for (const auto& e : fam) {
      CHECK(e.dihedral_family() != DihedralFamily::none);
      for (const auto& r : g->relators()) {
        Element v = g->identity();
        for (const auto& l : expand(r)) v = g->mul(v, e(l.exponent > 0 ? g->generator(l.generator)
                                                                        : g->inverse(g->generator(l.generator))));
        CHECK(v == g->identity());
      }
      CHECK(endo_from_images(g, e.generator_images()).ok());
    }
  }
}

TEST_CASE("family partition sizes") {
  for (std::uint32_t n = 3; n <= 10; ++n) {
    std::map<DihedralFamily, std::size_t> count;
    for (const auto& e : enumerate_endomorphisms(make_dihedral(n))) ++count[e.dihedral_family()];
    if (n % 2) {
      CHECK(count[DihedralFamily::s0] == n * n);
      CHECK(count[DihedralFamily::minus1] == 1);
    } else {
      CHECK(count[DihedralFamily::s1] == (n - 2) * n);
      CHECK(count[DihedralFamily::s2] == 4);
      CHECK(count[DihedralFamily::s3] == 2 * n);
      CHECK(count[DihedralFamily::s4] == 2 * n);
      CHECK(count[DihedralFamily::s5] == 2 * n);
    }
  }
}

TEST_CASE("composition of endomorphisms is an endomorphism") {
  for (std::uint32_t n : {3u, 4u}) {
    const auto g = make_dihedral(n);
    const auto all = enumerate_endomorphisms(g);
    for (const auto& x : all)
      for (const auto& y : all) {
        const auto c = compose(x, y);
        for (Element u = 0; u < g->order(); ++u) {
          CHECK(c(u) == x(y(u)));
          for (Element v = 0; v < g->order(); ++v) REQUIRE(c(g->mul(u, v)) == g->mul(c(u), c(v)));
        }
      }
  }
}
