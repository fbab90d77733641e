#include "tder/codes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

namespace tder {

std::string to_string(const CodeParams& p) {
  return "[" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + std::to_string(p.d) + "]";
}

LinearCode::LinearCode(Matrix<PrimeField> generator, CodeSource source)
    : generator_(std::move(generator)), source_(std::move(source)) {
  if (rank(generator_) != generator_.rows()) throw DomainError("generator matrix rows are not independent");
}

Expected<LinearCode> idd_code(const TwistedDerivation<PrimeField>& d, const std::vector<Element>& subset,
                              CodeSource source) {
  const auto& G = d.group();
  const std::size_t n = G.order();
  if (subset.size() >= n) throw DomainError("subset must have fewer than |G| elements");
  for (Element g : subset)
    if (g >= n) throw SpecError("subset element index out of range");
  Matrix<PrimeField> m(d.field(), 0, n);
  RowEchelon<PrimeField> e(d.field(), n);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    const auto& row = d(subset[i]).coeffs();
    if (!e.insert(row))
      return Rejection{"dependent subset", "D(" + G.name(subset[i]) + ") lies in the span of the earlier rows" +
                                               (i == 0 ? std::string(" (it is zero)") : std::string())};
    m.append_row(row);
  }
  if (source.subset.empty())
    for (Element g : subset) source.subset.push_back(G.name(g));
  if (source.group.empty()) source.group = G.description();
  if (source.sigma.empty()) source.sigma = d.sigma().describe();
  if (source.derivation.empty()) source.derivation = to_string(d.provenance());
  return LinearCode(std::move(m), std::move(source));
}

Vector<PrimeField> encode(const LinearCode& code, const Vector<PrimeField>& message) {
  if (message.size() != code.dimension()) throw DomainError("message length must equal the code dimension");
  return left_apply(message, code.generator());
}

std::size_t weight(const Vector<PrimeField>& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const Fp& x) { return !x.is_zero(); }));
}

namespace {

MinDistance enumerate_binary(const LinearCode& code) {
  const std::size_t k = code.dimension(), n = code.length();
  std::vector<std::uint64_t> rows(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < n; ++c)
      if (!code.generator()(i, c).is_zero()) rows[i] |= std::uint64_t{1} << c;
  std::uint64_t cw = 0, best_cw = 0;
  std::size_t best = n + 1;
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t s = 1; s < total && best > 1; ++s) {
    cw ^= rows[std::countr_zero(s)];
    const auto w = static_cast<std::size_t>(std::popcount(cw));
    if (w < best) {
      best = w;
      best_cw = cw;
    }
  }
  MinDistance out{best, Vector<PrimeField>(n, code.field().zero()), "enumeration"};
  for (std::size_t c = 0; c < n; ++c)
    if (best_cw >> c & 1) out.witness[c] = code.field().one();
  return out;
}

// Messages normalised so the first nonzero coordinate is 1; the remaining
// coordinates run through a q-ary Gray code, one row addition per step.
MinDistance enumerate_general(const LinearCode& code) {
  const std::size_t k = code.dimension(), n = code.length();
  const std::uint32_t q = code.field().characteristic();
  std::vector<std::vector<std::pair<std::uint32_t, std::uint8_t>>> rows(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < n; ++c)
      if (auto v = code.generator()(i, c).value()) rows[i].push_back({static_cast<std::uint32_t>(c), std::uint8_t(v)});

  std::size_t best = n + 1;
  std::vector<std::uint8_t> best_cw;
  std::vector<std::uint8_t> cw(n);
  for (std::size_t lead = 0; lead < k && best > 1; ++lead) {
    std::fill(cw.begin(), cw.end(), 0);
    std::size_t w = 0;
    auto add_row = [&](std::size_t r) {
      for (auto [c, v] : rows[r]) {
        const std::uint8_t old = cw[c];
        std::uint32_t nw = old + v;
        if (nw >= q) nw -= q;
        cw[c] = static_cast<std::uint8_t>(nw);
        w += (nw != 0) - (old != 0);
      }
    };
    add_row(lead);
    if (w < best) {
      best = w;
      best_cw = cw;
    }
    const std::size_t free = k - 1 - lead;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < free; ++i) total *= q;
    for (std::uint64_t s = 1; s < total && best > 1; ++s) {
      std::size_t j = 0;
      for (std::uint64_t t = s; t % q == 0; t /= q) ++j;
      add_row(lead + 1 + j);
      if (w < best) {
        best = w;
        best_cw = cw;
      }
    }
  }
  MinDistance out{best, Vector<PrimeField>(n, code.field().zero()), "enumeration"};
  for (std::size_t c = 0; c < n; ++c) out.witness[c] = code.field().from_int(best_cw[c]);
  return out;
}

double enumeration_cost(const LinearCode& code) {
  const double q = code.field().characteristic();
  return std::pow(q, double(code.dimension())) / (q - 1) * double(code.length());
}

double binomial(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
  return r;
}

constexpr double kBudget = 4e10;

struct CircuitSearch {
  const std::vector<Vector<PrimeField>>& cols;
  PrimeField field;
  std::size_t rows;
  std::size_t target;  // size of the dependent set being looked for
  std::vector<std::size_t> chosen;
  std::optional<std::vector<std::size_t>> found;

  void run(std::size_t start, const RowEchelon<PrimeField>& e) {
    if (found) return;
    if (chosen.size() + 1 == target) {
      for (std::size_t j = start; j < cols.size(); ++j)
        if (e.contains(cols[j])) {
          found = chosen;
          found->push_back(j);
          return;
        }
      return;
    }
    for (std::size_t j = start; j < cols.size() && !found; ++j) {
      if (e.contains(cols[j])) continue;
      auto next = e;
      next.insert(cols[j]);
      chosen.push_back(j);
      run(j + 1, next);
      chosen.pop_back();
    }
  }
};

}  // namespace

MinDistance min_distance_enumerate(const LinearCode& code) {
  if (code.dimension() == 0) throw DomainError("minimum distance of the zero code is undefined");
  if (enumeration_cost(code) > kBudget)
    throw DomainError("code too large for exhaustive enumeration (q^k = " +
                      std::to_string(code.field().characteristic()) + "^" + std::to_string(code.dimension()) + ")");
  if (code.field().characteristic() == 2 && code.length() <= 64) return enumerate_binary(code);
  return enumerate_general(code);
}

MinDistance min_distance_parity_check(const LinearCode& code) {
  if (code.dimension() == 0) throw DomainError("minimum distance of the zero code is undefined");
  const std::size_t n = code.length();
  const auto h = kernel_basis(code.generator());
  const std::size_t r = h.size();
  const auto& f = code.field();
  std::vector<Vector<PrimeField>> cols(n, Vector<PrimeField>(r, f.zero()));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < n; ++c) cols[c][i] = h[i][c];

  for (std::size_t w = 1; w <= r + 1; ++w) {
    CircuitSearch s{cols, f, r, w, {}, std::nullopt};
    s.run(0, RowEchelon<PrimeField>(f, r));
    if (!s.found) continue;
    Matrix<PrimeField> sub(f, r, w);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < w; ++j) sub(i, j) = cols[(*s.found)[j]][i];
    const auto ker = kernel_basis(sub);
    MinDistance out{w, Vector<PrimeField>(n, f.zero()), "parity-check"};
    for (std::size_t j = 0; j < w; ++j) out.witness[(*s.found)[j]] = ker.front()[j];
    return out;
  }
  throw DomainError("internal: no dependent column set found");
}

MinDistance min_distance(const LinearCode& code) {
  if (code.dimension() == 0) throw DomainError("minimum distance of the zero code is undefined");
  const double enum_cost = enumeration_cost(code);
  const std::size_t n = code.length(), r = n - code.dimension();
  // Parity-check search cost up to the Singleton bound.
  double pc_cost = 0;
  for (std::size_t w = 1; w <= r + 1; ++w) pc_cost += binomial(n, w - 1) * double(n) * double(r + 1);
  if (enum_cost <= pc_cost) return min_distance_enumerate(code);
  if (pc_cost > kBudget) throw DomainError("code too large for exact minimum distance");
  return min_distance_parity_check(code);
}

LinearCode dual_code(const LinearCode& code) {
  const auto k = kernel_basis(code.generator());
  CodeSource s = code.source();
  s.derivation = s.derivation.empty() ? "dual" : "dual of " + s.derivation;
  return LinearCode(Matrix<PrimeField>::from_rows(code.field(), k, code.length()), std::move(s));
}

bool is_lcd(const LinearCode& code) {
  const auto& g = code.generator();
  return rank(multiply(g, transpose(g))) == code.dimension();
}

bool is_self_orthogonal(const LinearCode& code) {
  const auto& g = code.generator();
  return multiply(g, transpose(g)).is_zero();
}

CodeReport code_report(const LinearCode& code) {
  CodeReport r;
  const auto dual = dual_code(code);
  r.params = {code.length(), code.dimension(), code.dimension() ? min_distance(code).d : 0};
  r.dual = {dual.length(), dual.dimension(), dual.dimension() ? min_distance(dual).d : 0};
  r.lcd = is_lcd(code);
  r.self_orthogonal = is_self_orthogonal(code);
  r.source = code.source();
  return r;
}

Expected<CodeReport> code_report(const TwistedDerivation<PrimeField>& d, const std::vector<Element>& subset,
                                 CodeSource source) {
  auto c = idd_code(d, subset, std::move(source));
  if (!c) return c.rejection();
  return code_report(*c);
}

std::vector<SweepEntry> subset_sweep(const TwistedDerivation<PrimeField>& d, std::size_t k,
                                     std::size_t max_candidates, std::uint64_t seed) {
  const auto& G = d.group();
  std::vector<Element> rows;
  for (Element g = 0; g < G.order(); ++g)
    if (!d(g).is_zero()) rows.push_back(g);
  if (k == 0 || k > rows.size()) return {};

  std::set<std::vector<Element>> subsets;
  const double total = binomial(rows.size(), k);
  if (k <= 12 && total <= double(max_candidates)) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::vector<Element> s;
      for (auto i : idx) s.push_back(rows[i]);
      subsets.insert(std::move(s));
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == rows.size() - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  } else {
    std::mt19937_64 rng(seed);
    std::vector<Element> pool = rows;
    for (std::size_t attempt = 0; attempt < max_candidates; ++attempt) {
      std::shuffle(pool.begin(), pool.end(), rng);
      std::vector<Element> s(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
      std::sort(s.begin(), s.end());
      subsets.insert(std::move(s));
    }
  }

  std::vector<SweepEntry> out;
  for (const auto& s : subsets) {
    if (s.size() >= G.order()) continue;
    auto r = code_report(d, s);
    if (r) out.push_back({s, *r});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const SweepEntry& a, const SweepEntry& b) { return a.report.params.d > b.report.params.d; });
  return out;
}

nlohmann::json to_json(const CodeReport& r) {
  return {{"n", r.params.n},
          {"k", r.params.k},
          {"d", r.params.d},
          {"dual", {{"n", r.dual.n}, {"k", r.dual.k}, {"d", r.dual.d}}},
          {"lcd", r.lcd},
          {"self_orthogonal", r.self_orthogonal},
          {"source",
           {{"group", r.source.group},
            {"sigma", r.source.sigma},
            {"derivation", r.source.derivation},
            {"subset", r.source.subset}}}};
}

CodeReport report_from_json(const nlohmann::json& j) {
  try {
    CodeReport r;
    r.params = {j.at("n").get<std::size_t>(), j.at("k").get<std::size_t>(), j.at("d").get<std::size_t>()};
    const auto& du = j.at("dual");
    r.dual = {du.at("n").get<std::size_t>(), du.at("k").get<std::size_t>(), du.at("d").get<std::size_t>()};
    r.lcd = j.at("lcd").get<bool>();
    r.self_orthogonal = j.at("self_orthogonal").get<bool>();
    const auto& s = j.at("source");
    r.source = {s.at("group").get<std::string>(), s.at("sigma").get<std::string>(),
                s.at("derivation").get<std::string>(), s.at("subset").get<std::vector<std::string>>()};
    if (r.params.k + r.dual.k != r.params.n || r.dual.n != r.params.n)
      throw SpecError("report dimensions are inconsistent");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("malformed code report: ") + e.what());
  }
}

std::string matrix_text(const Matrix<PrimeField>& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ' ';
      out += std::to_string(m(r, c).value());
    }
    out += '\n';
  }
  return out;
}

Matrix<PrimeField> parse_matrix_text(const PrimeField& f, std::string_view text) {
  std::vector<Vector<PrimeField>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    Vector<PrimeField> row;
    long long v;
    while (ls >> v) row.push_back(f.from_int(v));
    if (!ls.eof()) throw SpecError("matrix text has a non-numeric entry");
    if (!row.empty()) rows.push_back(std::move(row));
  }
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  return Matrix<PrimeField>::from_rows(f, rows, cols);
}

}  // namespace tder
