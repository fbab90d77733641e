#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "tder/derivation.hpp"

namespace tder {

struct CodeSource {
  std::string group;
  std::string sigma;
  std::string derivation;
  std::vector<std::string> subset;
};

struct CodeParams {
  std::size_t n = 0, k = 0, d = 0;
  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};
std::string to_string(const CodeParams& p);  // "[n,k,d]"

class LinearCode {
 public:
  // Rows must be independent.
  explicit LinearCode(Matrix<PrimeField> generator, CodeSource source = {});

  const PrimeField& field() const { return generator_.field(); }
  std::size_t length() const { return generator_.cols(); }
  std::size_t dimension() const { return generator_.rows(); }
  const Matrix<PrimeField>& generator() const { return generator_; }
  const CodeSource& source() const { return source_; }

 private:
  Matrix<PrimeField> generator_;
  CodeSource source_;
};

// Row i is the coefficient vector of D(g_i).
template <ExactField F>
Matrix<F> derivation_matrix(const TwistedDerivation<F>& d) {
  const std::size_t n = d.group().order();
  Matrix<F> b(d.field(), n, n);
  for (Element g = 0; g < n; ++g)
    for (Element h = 0; h < n; ++h) b(g, h) = d(g).coeff(h);
  return b;
}

Expected<LinearCode> idd_code(const TwistedDerivation<PrimeField>& d, const std::vector<Element>& subset,
                              CodeSource source = {});

Vector<PrimeField> encode(const LinearCode& code, const Vector<PrimeField>& message);

struct MinDistance {
  std::size_t d = 0;
  Vector<PrimeField> witness;  // a codeword of weight d
  std::string method;          // "enumeration" or "parity-check"
};

// Exact minimum distance. Enumerates codewords, or searches for the smallest
// dependent column set of a parity-check matrix when that is cheaper.
MinDistance min_distance(const LinearCode& code);
// Forces exhaustive enumeration of all codewords.
MinDistance min_distance_enumerate(const LinearCode& code);
MinDistance min_distance_parity_check(const LinearCode& code);

LinearCode dual_code(const LinearCode& code);
bool is_lcd(const LinearCode& code);
bool is_self_orthogonal(const LinearCode& code);
std::size_t weight(const Vector<PrimeField>& v);

struct CodeReport {
  CodeParams params;
  CodeParams dual;
  bool lcd = false;
  bool self_orthogonal = false;
  CodeSource source;
};

CodeReport code_report(const LinearCode& code);
Expected<CodeReport> code_report(const TwistedDerivation<PrimeField>& d, const std::vector<Element>& subset,
                                 CodeSource source = {});

struct SweepEntry {
  std::vector<Element> subset;
  CodeReport report;
};

// Ranked by d (descending), then by subset. Exhaustive when k <= 12 and the
// number of subsets fits max_candidates, otherwise seeded random sampling.
std::vector<SweepEntry> subset_sweep(const TwistedDerivation<PrimeField>& d, std::size_t k,
                                     std::size_t max_candidates, std::uint64_t seed = 0);

nlohmann::json to_json(const CodeReport& r);
CodeReport report_from_json(const nlohmann::json& j);

// One row per line, space-separated digits.
std::string matrix_text(const Matrix<PrimeField>& m);
Matrix<PrimeField> parse_matrix_text(const PrimeField& f, std::string_view text);

}  // namespace tder
