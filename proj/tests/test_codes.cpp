#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "tder/codes.hpp"
#include "tder/golden.hpp"

using namespace tder;

namespace {

const PrimeField f2(2);

std::vector<Element> subset(const GroupPtr& g, const std::vector<std::string>& names) {
  std::vector<Element> out;
  for (const auto& n : names) out.push_back(g->parse_element(n));
  return out;
}

std::vector<std::string> powers(std::initializer_list<int> ks) {
  std::vector<std::string> out;
  for (int k : ks) out.push_back(k == 1 ? "x" : "x^" + std::to_string(k));
  return out;
}

TwistedDerivation<PrimeField> c14(const std::string& seed) {
  return golden::table_derivation(golden::table("c14"), seed);
}

const std::string kD1 = "1 + x + x^2 + x^3 + x^4 + x^6 + x^9";
const std::string kD4 = "1 + x + x^3 + x^4 + x^5 + x^6 + x^9";

LinearCode random_code(const PrimeField& f, std::size_t k, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    Matrix<PrimeField> m(f, k, n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = f.from_int(static_cast<std::int64_t>(rng() % f.characteristic()));
    if (rank(m) == k) return LinearCode(m);
  }
}

// Every codeword, zero included.
std::vector<Vector<PrimeField>> codewords(const LinearCode& c) {
  std::vector<Vector<PrimeField>> out{Vector<PrimeField>(c.length(), c.field().zero())};
  for (std::size_t i = 0; i < c.dimension(); ++i) {
    const auto row = c.generator().row_vector(i);
    std::vector<Vector<PrimeField>> next;
    for (const auto& w : out)
      for (std::uint32_t a = 0; a < c.field().characteristic(); ++a) {
        auto v = w;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] += c.field().from_int(a) * row[j];
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

bool same_row_space(const Matrix<PrimeField>& a, const Matrix<PrimeField>& b) {
  if (a.cols() != b.cols()) return false;
  auto e = echelon(a);
  for (std::size_t i = 0; i < b.rows(); ++i)
    if (!e.contains(b.row_vector(i))) return false;
  return rank(a) == rank(b);
}

}  // namespace

TEST_CASE("derivation matrix") {
  const auto t = golden::table("c18-i");
  const auto d = golden::table_derivation(t, t.derivation);
  const auto b = derivation_matrix(d);
  const std::vector<int> row_x{1, 1, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0};
  for (std::size_t j = 0; j < 18; ++j) CHECK(b(1, j) == f2.from_int(row_x[j]));
  for (std::size_t k = 0; k < 18; k += 2) CHECK(is_zero_vector<PrimeField>(b.row_vector(k)));

  const auto g = make_cyclic(5);
  const auto id = identity_endomorphism(g);
  const TwistedDerivation<PrimeField> zero(id, id, f2, std::vector(5, GroupRingElement<PrimeField>(g, f2)),
                                           Provenance::solver);
  CHECK(derivation_matrix(zero).is_zero());
}

TEST_CASE("IDD codes from subsets") {
  const auto t = golden::table("c18-i");
  const auto d = golden::table_derivation(t, t.derivation);
  const auto g = d.group_ptr();
  const auto s1 = idd_code(d, subset(g, powers({1, 5, 7, 9, 11, 13, 15, 17})));
  REQUIRE(s1.ok());
  CHECK(s1->length() == 18);
  CHECK(s1->dimension() == 8);
  CHECK(min_distance(*s1).d == 6);
  CHECK_FALSE(is_lcd(*s1));
  const auto dual = dual_code(*s1);
  CHECK(dual.dimension() == 10);
  CHECK(min_distance(dual).d == 4);

  const auto bad = idd_code(d, subset(g, {"x", "x^2"}));
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.rejection().reason == "dependent subset");
  CHECK(bad.rejection().detail.find("D(x^2)") != std::string::npos);
  CHECK_THROWS_AS(idd_code(d, std::vector<Element>(18, 1)), DomainError);

  const auto td = golden::table("d12");
  const auto dd = golden::table_derivation(td, td.derivation);
  const auto gd = dd.group_ptr();
  const auto r = code_report(dd, subset(gd, {"a", "a^2", "a^3", "b"}));
  REQUIRE(r.ok());
  CHECK(r->params == CodeParams{12, 4, 4});
  CHECK(r->self_orthogonal);
  CHECK_FALSE(r->lcd);
}

TEST_CASE("C14 codes") {
  const auto d1 = c14(kD1);
  const auto g = d1.group_ptr();
  const auto code = *idd_code(d1, subset(g, powers({1, 3, 5, 7, 9, 11, 13})));
  CHECK(min_distance(code).d == 4);
  CHECK(is_lcd(code));
  const auto r = code_report(code);
  CHECK(r.dual == CodeParams{14, 7, 4});
}

TEST_CASE("C24 ternary code with the printed generator matrix") {
  const auto& t = golden::table("c24");
  const PrimeField f3(3);
  std::string printed;
  for (const auto& m : golden::printed_matrices())
    if (m.id == "c24") printed = m.text;
  REQUIRE_FALSE(printed.empty());
  const LinearCode from_print(parse_matrix_text(f3, printed));
  CHECK(from_print.dimension() == 16);
  CHECK(min_distance(from_print).d == 3);
  CHECK(is_lcd(from_print));
  CHECK(code_report(from_print).dual == CodeParams{24, 8, 7});
  // the stated D(x) has an x^14 term that the printed first row lacks
  const auto cmp = golden::compare_printed("c24");
  REQUIRE(cmp.diffs.size() == 1);
  CHECK(cmp.diffs[0].column == "x^14");
  const LinearCode recomputed(golden::recomputed_matrix("c24"));
  CHECK(min_distance(recomputed).d == 4);
  CHECK(t.rows.front().code == CodeParams{24, 16, 3});
}

TEST_CASE("trivial codes") {
  const PrimeField f3(3);
  Matrix<PrimeField> id(f3, 3, 5);
  for (std::size_t i = 0; i < 3; ++i) id(i, i + 2) = f3.one();
  const LinearCode c(id);
  CHECK(min_distance(c).d == 1);
  CHECK(is_zero_vector<PrimeField>(encode(c, Vector<PrimeField>(3, f3.zero()))));
  for (std::size_t i = 0; i < 3; ++i) {
    Vector<PrimeField> e(3, f3.zero());
    e[i] = f3.one();
    CHECK((encode(c, e) == id.row_vector(i)));
  }
  CHECK_THROWS_AS(encode(c, Vector<PrimeField>(2, f3.zero())), DomainError);

  const LinearCode full(Matrix<PrimeField>::identity(f3, 4));
  CHECK(dual_code(full).dimension() == 0);

  Matrix<PrimeField> dep(f3, 2, 3);
  dep(0, 0) = dep(1, 0) = f3.one();
  CHECK_THROWS_AS(LinearCode{dep}, DomainError);
}

TEST_CASE("encoding through the matrix equals encoding through the derivation") {
  std::mt19937_64 rng(77);
  for (const auto& t : golden::tables()) {
    for (const auto& row : t.rows) {
      const auto d = golden::table_derivation(t, row.derivation.empty() ? t.derivation : row.derivation);
      const auto g = d.group_ptr();
      const auto sub = subset(g, row.subset);
      const auto code = idd_code(d, sub);
      REQUIRE(code.ok());
      const auto& f = code->field();
      for (int i = 0; i < 100; ++i) {
        Vector<PrimeField> msg;
        GroupRingElement<PrimeField> alpha(g, f);
        for (Element x : sub) {
          msg.push_back(f.from_int(static_cast<std::int64_t>(rng() % t.prime)));
          alpha.add_to(x, msg.back());
        }
        CHECK((encode(*code, msg) == d(alpha).coeffs()));
      }
    }
  }
}

TEST_CASE("sweeps") {
  const auto d4 = c14(kD4);
  const auto s4 = subset_sweep(d4, 4, 100000);
  REQUIRE_FALSE(s4.empty());
  bool found = false;
  for (const auto& e : s4) found |= e.report.params == CodeParams{14, 4, 7};
  CHECK(found);

  const auto d1 = c14(kD1);
  const auto s1 = subset_sweep(d1, 4, 100000);
  REQUIRE_FALSE(s1.empty());
  CHECK(s1.front().report.params.d == 6);
  for (std::size_t i = 1; i < s1.size(); ++i) CHECK(s1[i - 1].report.params.d >= s1[i].report.params.d);

  const auto s2 = subset_sweep(d1, 2, 100000);
  found = false;
  for (const auto& e : s2) found |= e.report.params == CodeParams{14, 2, 7};
  CHECK(found);

  const auto k1 = subset_sweep(d1, 1, 100000);
  std::size_t max_weight = 0;
  for (Element x = 0; x < 14; ++x) max_weight = std::max(max_weight, weight(d1(x).coeffs()));
  CHECK(k1.front().report.params.d == max_weight);

  const auto a = subset_sweep(d1, 6, 200, 5), b = subset_sweep(d1, 6, 200, 5);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].subset == b[i].subset);
}

TEST_CASE("minimum distance properties on random codes") {
  std::mt19937_64 rng(2024);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t n = 4 + rng() % 7;
      const std::size_t k = 1 + rng() % std::min<std::size_t>(n - 1, p == 2 ? 6 : 4);
      const auto c = random_code(f, k, n, rng);
      const auto md = min_distance_enumerate(c);
      CHECK(md.d == min_distance_parity_check(c).d);
      CHECK(md.d == min_distance(c).d);
      CHECK(weight(md.witness) == md.d);
      CHECK(echelon(c.generator()).contains(md.witness));
      std::size_t least = n;
      for (const auto& w : codewords(c))
        if (weight(w) > 0) least = std::min(least, weight(w));
      CHECK(least == md.d);
      CHECK(k + md.d <= n + 1);

      const auto dual = dual_code(c);
      CHECK(dual.dimension() == n - k);
      CHECK(multiply(c.generator(), transpose(dual.generator())).is_zero());
      if (dual.dimension() > 0) CHECK(same_row_space(dual_code(dual).generator(), c.generator()));

      bool pairwise_zero = true;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
          auto s = f.zero();
          for (std::size_t l = 0; l < n; ++l) s += c.generator()(i, l) * c.generator()(j, l);
          pairwise_zero &= is_zero(s);
        }
      CHECK(is_self_orthogonal(c) == pairwise_zero);
      if (is_self_orthogonal(c)) CHECK_FALSE(is_lcd(c));
      const auto r = code_report(c);
      CHECK(r.params.k + r.dual.k == n);
    }
  }
}

TEST_CASE("self-orthogonality is sensitive to a single flipped entry") {
  const auto td = golden::table("d12");
  const auto d = golden::table_derivation(td, td.derivation);
  const auto g = d.group_ptr();
  const auto code = *idd_code(d, subset(g, {"a", "a^2", "a^3", "b"}));
  REQUIRE(is_self_orthogonal(code));
  std::size_t broken = 0, total = 0;
  for (std::size_t i = 0; i < code.dimension(); ++i)
    for (std::size_t j = 0; j < code.length(); ++j) {
      auto m = code.generator();
      m(i, j) += f2.one();
      if (rank(m) < m.rows()) continue;
      ++total;
      broken += !is_self_orthogonal(LinearCode(m));
    }
  CHECK(total > 0);
  CHECK(broken == total);

  // a perturbed image of a no longer extends to a derivation
  GeneratorMap<PrimeField> gm{g, {d(g->parse_element("a")) + GroupRingElement<PrimeField>::one(g, f2),
                                  d(g->parse_element("b"))}};
  CHECK_FALSE(extend_from_generators(gm, d.sigma(), d.tau(), f2).ok());
}

TEST_CASE("text and JSON round trips") {
  const auto t = golden::table("c14");
  const auto d1 = c14(kD1);
  const auto code = *idd_code(d1, subset(d1.group_ptr(), powers({1, 3, 5, 7, 9, 11, 13})),
                              CodeSource{"C14", "x=x", kD1, powers({1, 3, 5, 7, 9, 11, 13})});
  const auto text = matrix_text(code.generator());
  CHECK(parse_matrix_text(f2, text) == code.generator());
  CHECK_THROWS_AS(parse_matrix_text(f2, "1 0 x\n"), SpecError);

  const auto r = code_report(code);
  const auto j = to_json(r);
  CHECK(j["n"] == 14);
  CHECK(j["dual"]["d"] == 4);
  CHECK(j["source"]["derivation"] == kD1);
  const auto back = report_from_json(j);
  CHECK(back.params == r.params);
  CHECK(back.dual == r.dual);
  CHECK(back.lcd == r.lcd);
  CHECK(back.source.subset == r.source.subset);
  CHECK(to_json(back) == j);
  CHECK_THROWS_AS(report_from_json(nlohmann::json{{"n", 3}}), SpecError);
}

TEST_CASE("golden tables") {
  for (const auto& id : {"c18-i", "c18-ii", "c14", "c14-d1", "c14-d3", "d12"}) {
    for (const auto& o : golden::reproduce(golden::table(id))) {
      INFO(golden::format_outcome(o));
      CHECK(o.pass);
    }
  }
  for (const auto& id : {"c18-i", "c18-ii", "c14-d1", "c14-d3"}) {
    const auto cmp = golden::compare_printed(id);
    CHECK(cmp.shape_ok);
    CHECK(cmp.diffs.empty());
  }
}
