#include "tder/dihedral_forms.hpp"

#include <numeric>

namespace tder {

namespace {

Rejection no_closed_form(std::uint32_t n, DihedralFamily f) {
  return Rejection{"no closed form",
                   to_string(f) + " on D" + std::to_string(2 * n) + " is handled by the generic solver only"};
}

std::string rot_name(std::int64_t i) { return i == 0 ? "1" : i == 1 ? "a" : "a^" + std::to_string(i); }

std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

bool has_closed_form(std::uint32_t n, DihedralFamily family) {
  return n % 2 ? family == DihedralFamily::s0 : family == DihedralFamily::s1 || family == DihedralFamily::s3;
}

Expected<BranchValue> predict_dim_derivations(std::uint32_t n, std::uint32_t p, DihedralFamily family,
                                              const DihedralEndoParams& par) {
  if (!has_closed_form(n, family)) return no_closed_form(n, family);
  const std::size_t d = par.d, m = par.m;
  const bool coprime = p == 0 || n % p != 0;
  const bool p_divides_d = p != 0 && d % p == 0;
  if (n % 2) {
    if (p == 2) return BranchValue{(3 * n - d) / 2 + 1, "n odd, char 2: (3n-d)/2+1"};
    if (coprime) return BranchValue{(3 * n - d) / 2 - 1, "n odd, p coprime to n: (3n-d)/2-1"};
    if (!p_divides_d) return BranchValue{2 * n - (d + 3) / 2, "n odd, p | n, p coprime to d: 2n-(d+3)/2"};
    return BranchValue{4 * ((n - 1) / 2), "n odd, p | d: 4(n-1)/2"};
  }
  if (p == 2) return BranchValue{2 * (std::size_t(n) + 2), "n even, char 2: 2(n+2)"};
  if (m % 2) {
    if (coprime) return BranchValue{(3 * n - d) / 2 - 2, "n even, m odd, p coprime to n: (3n-d)/2-2"};
    if (!p_divides_d) return BranchValue{2 * n - d / 2 - 3, "n even, m odd, p | n, p coprime to d: 2n-d/2-3"};
    return BranchValue{2 * (std::size_t(n) - 2), "n even, m odd, p | d: 2(n-2)"};
  }
  if (coprime) return BranchValue{3 * n / 2 - d - 2, "n even, m even, p coprime to n: 3n/2-d-2"};
  if (!p_divides_d) return BranchValue{2 * n - d - 3, "n even, m even, p | n, p coprime to d: 2n-d-3"};
  return BranchValue{2 * (std::size_t(n) - 2), "n even, m even, p | d: 2(n-2)"};
}

Expected<std::vector<PredictedClass>> predict_classes(std::uint32_t n, DihedralFamily family,
                                                      const DihedralEndoParams& par) {
  if (!has_closed_form(n, family)) return no_closed_form(n, family);
  const std::int64_t N = n;
  std::vector<PredictedClass> out;
  out.push_back({"{1}", {0}});
  if (n % 2 == 0) out.push_back({"{" + rot_name(N / 2) + "}", {static_cast<Element>(N / 2)}});
  for (std::int64_t k = 1; 2 * k < N; ++k)
    out.push_back({"{" + rot_name(k) + ", " + rot_name(N - k) + "}",
                   {static_cast<Element>(k), static_cast<Element>(N - k)}});

  // Reflections: a^u b ~ a^(step*i + u) b ~ a^(step*i + 2 j0 - u) b.
  const std::int64_t d = par.d, j0 = par.j0;
  const bool m_even = par.m % 2 == 0;
  const std::int64_t step = m_even ? 2 * d : d;
  std::vector<std::int64_t> singles, pairs;
  if (n % 2) {
    singles = {j0};
    for (std::int64_t u = j0 + 1; u <= j0 + (d - 1) / 2; ++u) pairs.push_back(u);
  } else if (!m_even) {
    singles = {j0, j0 + d / 2};
    for (std::int64_t u = j0 + 1; u < j0 + d / 2; ++u) pairs.push_back(u);
  } else {
    singles = {j0, j0 + d};
    for (std::int64_t u = j0 + 1; u < j0 + d; ++u) pairs.push_back(u);
  }
  auto orbit = [&](std::int64_t u) {
    std::vector<bool> in(n, false);
    for (std::int64_t i = 0; i < N; i += step) {
      in[mod(i + u, N)] = true;
      in[mod(i + 2 * j0 - u, N)] = true;
    }
    std::vector<Element> members;
    for (std::int64_t i = 0; i < N; ++i)
      if (in[i]) members.push_back(static_cast<Element>(N + i));
    return members;
  };
  const std::string gen = "a^(" + std::to_string(step) + "i+u)b";
  for (auto u : singles)
    out.push_back({"{" + gen + "}, u=" + std::to_string(mod(u, N)), orbit(u)});
  for (auto u : pairs)
    out.push_back({"{" + gen + "} u {a^(" + std::to_string(step) + "i+2j0-u)b}, u=" + std::to_string(mod(u, N)),
                   orbit(u)});
  return out;
}

Expected<std::size_t> predict_dim_inner(std::uint32_t n, DihedralFamily family, const DihedralEndoParams& par) {
  if (!has_closed_form(n, family)) return no_closed_form(n, family);
  const std::size_t d = par.d;
  if (n % 2) return (3 * n - d) / 2 - 1;
  if (par.m % 2) return (3 * n - d) / 2 - 2;
  return 3 * n / 2 - d - 2;
}

bool predict_outer(std::uint32_t n, std::uint32_t p) { return p == 2 || (p != 0 && n % p == 0); }

Expected<DihedralPrediction> predict(const Endomorphism& sigma, std::uint32_t p) {
  const auto n = sigma.group().dihedral_n();
  const auto fam = sigma.dihedral_family();
  auto par = sigma.dihedral_params();
  if (!par || !has_closed_form(n, fam)) return no_closed_form(n, fam);
  DihedralPrediction out;
  out.params = *par;
  out.characteristic = p;
  out.dim_derivations = *predict_dim_derivations(n, p, fam, *par);
  out.classes = *predict_classes(n, fam, *par);
  out.class_count = out.classes.size();
  out.dim_inner = *predict_dim_inner(n, fam, *par);
  out.outer_nonzero = predict_outer(n, p);
  return out;
}

std::string to_string(LemmaBasis w) {
  switch (w) {
    case LemmaBasis::anticentralizer_b: return "anticentralizer-b";
    case LemmaBasis::anticentralizer_ab: return "anticentralizer-ab";
    case LemmaBasis::centralizer_b: return "centralizer-b";
    case LemmaBasis::centralizer_ab: return "centralizer-ab";
  }
  return "?";
}

LemmaBasis parse_lemma_basis(std::string_view s) {
  for (auto w : {LemmaBasis::anticentralizer_b, LemmaBasis::anticentralizer_ab, LemmaBasis::centralizer_b,
                 LemmaBasis::centralizer_ab})
    if (s == to_string(w)) return w;
  throw SpecError("unknown basis kind '" + std::string(s) + "'");
}

}  // namespace tder
