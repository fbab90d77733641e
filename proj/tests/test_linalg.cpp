#include <random>

#include "doctest.h"
#include "tder/golden.hpp"
#include "tder/matrix.hpp"

using namespace tder;

namespace {

template <ExactField F>
Matrix<F> random_matrix(const F& f, std::size_t r, std::size_t c, std::mt19937_64& rng, int zero_bias = 2) {
  std::uniform_int_distribution<int> d(-3, 3), z(0, zero_bias);
  Matrix<F> m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (z(rng) == 0) m(i, j) = f.from_int(d(rng));
  return m;
}

template <ExactField F>
void rank_nullity(const F& f, std::mt19937_64& rng) {
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 9, c = 1 + rng() % 9;
    const auto m = random_matrix(f, r, c, rng);
    const auto k = kernel_basis(m);
    CHECK(rank(m) + k.size() == c);
    CHECK(rank(m) <= std::min(r, c));
    for (const auto& v : k) CHECK(is_zero_vector<F>(tder::apply(m, v)));
    CHECK(rank_of(f, c, k) == k.size());
  }
}

}  // namespace

TEST_CASE("prime fields check primality") {
  CHECK_THROWS_AS(PrimeField(4), SpecError);
  CHECK_THROWS_AS(PrimeField(1), SpecError);
  CHECK_NOTHROW(PrimeField(7));
}

TEST_CASE("Fermat: x^p = x in GF(p)") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const PrimeField f(p);
    for (std::int64_t x = 0; x < p; ++x) CHECK(f.from_int(x).pow(p) == f.from_int(x));
  }
}

TEST_CASE("GF(p) arithmetic") {
  const PrimeField f(7);
  CHECK((f.from_int(3) * f.from_int(5)).value() == 1);
  CHECK((f.from_int(-1)).value() == 6);
  CHECK(f.from_int(3) / f.from_int(5) == f.from_int(2));
  CHECK_THROWS_AS(f.from_int(1) / f.zero(), DomainError);
  CHECK_THROWS_AS(f.from_int(1) + PrimeField(5).one(), DomainError);
}

TEST_CASE("rationals stay exact and canonical") {
  const RationalField q;
  mpq_class a(123456789, 987654321);
  a.canonicalize();
  CHECK(a * inverse(a) == q.one());
  mpq_class big = 1;
  for (int i = 0; i < 40; ++i) big *= mpq_class(1000003);
  CHECK(big / big == 1);
  CHECK(parse_scalar(q, "6/4") == mpq_class(3, 2));
  CHECK(parse_scalar(PrimeField(5), "1/2").value() == 3);
}

TEST_CASE("parse_field") {
  CHECK(field_name(parse_field("GF(3)")) == "GF(3)");
  CHECK(field_name(parse_field("Q")) == "Q");
  CHECK(field_characteristic(parse_field("5")) == 5);
  CHECK_THROWS_AS(parse_field("GF(9)"), SpecError);
  CHECK_THROWS_AS(parse_field("GF(x)"), SpecError);
}

TEST_CASE("rank examples") {
  const PrimeField f2(2);
  CHECK(rank(Matrix<PrimeField>::identity(f2, 3)) == 3);
  CHECK(rank(Matrix<PrimeField>(f2, 4, 6)) == 0);
  const auto m = parse_matrix_text(f2, golden::printed_matrices().front().text);
  CHECK(m.rows() == 8);
  CHECK(m.cols() == 18);
  CHECK(rank(m) == 8);
}

TEST_CASE("kernel examples") {
  const PrimeField f2(2);
  CHECK(kernel_basis(Matrix<PrimeField>::identity(f2, 4)).empty());
  const auto m = Matrix<PrimeField>::from_rows(f2, {{f2.one(), f2.one()}}, 2);
  const auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == Vector<PrimeField>{f2.one(), f2.one()});
}

TEST_CASE("solve") {
  const RationalField q;
  const auto id = Matrix<RationalField>::identity(q, 3);
  const Vector<RationalField> e1{1, 0, 0};
  CHECK(solve(id, e1) == e1);
  CHECK_FALSE(solve(Matrix<RationalField>(q, 3, 3), e1).has_value());
  CHECK_THROWS_AS(solve(id, Vector<RationalField>{1, 0}), DomainError);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = random_matrix(q, 1 + rng() % 6, 1 + rng() % 6, rng);
    Vector<RationalField> x(m.cols());
    for (auto& v : x) v = int(rng() % 7) - 3;
    const auto b = tder::apply(m, x);
    const auto y = solve(m, b);
    REQUIRE(y.has_value());
    CHECK((tder::apply(m, *y) == b));
  }
}

TEST_CASE("rank + nullity = cols over GF(2), GF(3), GF(7) and Q") {
  std::mt19937_64 rng(11);
  rank_nullity(PrimeField(2), rng);
  rank_nullity(PrimeField(3), rng);
  rank_nullity(PrimeField(7), rng);
  rank_nullity(RationalField{}, rng);
}

TEST_CASE("transpose and products") {
  const PrimeField f(5);
  std::mt19937_64 rng(5);
  const auto a = random_matrix(f, 3, 4, rng, 0), b = random_matrix(f, 4, 2, rng, 0);
  CHECK(transpose(multiply(a, b)) == multiply(transpose(b), transpose(a)));
  Vector<PrimeField> v{f.one(), f.from_int(2), f.zero()};
  CHECK((left_apply(v, a) == tder::apply(transpose(a), v)));
  CHECK_THROWS_AS(multiply(a, a), DomainError);
}

TEST_CASE("incremental echelon") {
  const PrimeField f(3);
  RowEchelon<PrimeField> e(f, 3);
  CHECK(e.insert({f.one(), f.one(), f.zero()}));
  CHECK(e.insert({f.zero(), f.one(), f.one()}));
  CHECK_FALSE(e.insert({f.one(), f.from_int(2), f.one()}));
  CHECK(e.contains({f.from_int(2), f.zero(), f.from_int(-2)}));
  CHECK(e.rank() == 2);
  CHECK(e.pivot_columns() == std::vector<std::size_t>{0, 1});
}
