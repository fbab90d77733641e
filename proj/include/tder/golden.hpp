#pragma once

// Reference tables of IDD codes and their generator matrices, with a
// harness that recomputes every row.

#include <optional>
#include <string>
#include <vector>

#include "tder/codes.hpp"

namespace tder::golden {

struct Row {
  std::string label;
  std::vector<std::string> subset;  // element names
  CodeParams code;
  bool lcd = false;
  std::optional<CodeParams> dual;
  std::optional<bool> self_orthogonal;
  std::string derivation;  // overrides the table's derivation when set
};

struct Table {
  std::string id;
  std::string title;
  std::string group;    // "cyclic:18", "dihedral:6"
  std::uint32_t prime;  // field GF(prime)
  std::map<std::string, std::string> sigma;
  // Cyclic tables: the seed v with D(x^k) = k sigma(x)^(k-1) v.
  // Dihedral tables: generator images "a=...;b=...".
  std::string derivation;
  std::vector<Row> rows;
};

struct PrintedMatrix {
  std::string id;
  std::string text;
};

const std::vector<Table>& tables();
const Table& table(const std::string& id);
const std::vector<PrintedMatrix>& printed_matrices();

GroupPtr table_group(const Table& t);
TwistedDerivation<PrimeField> table_derivation(const Table& t, const std::string& derivation);

enum class RowSource { derivation, printed_matrix };

struct RowOutcome {
  std::string table;
  Row expected;
  std::optional<CodeReport> actual;
  std::string rejection;
  bool pass = false;
};

std::vector<RowOutcome> reproduce(const Table& t, RowSource source = RowSource::derivation);
bool row_matches(const Row& expected, const CodeReport& actual);

struct EntryDiff {
  std::size_t row, col;
  std::uint32_t printed, computed;
  std::string column;  // group element labelling the column
};
struct MatrixComparison {
  std::string id;
  std::size_t rows = 0, cols = 0;
  bool shape_ok = false;
  std::vector<EntryDiff> diffs;
};

// Recomputed generator matrix (subset rows in table order) vs the printed one.
Matrix<PrimeField> recomputed_matrix(const std::string& id);
MatrixComparison compare_printed(const std::string& id);

std::string format_outcome(const RowOutcome& o);

}  // namespace tder::golden
