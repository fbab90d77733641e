#include "tder/golden.hpp"

#include <sstream>

namespace tder::golden {

namespace {

std::vector<std::string> powers(std::initializer_list<int> exps) {
  std::vector<std::string> out;
  for (int e : exps) out.push_back(e == 1 ? "x" : "x^" + std::to_string(e));
  return out;
}

std::vector<std::string> c24_s1_minus(std::initializer_list<int> removed) {
  std::vector<std::string> out;
  for (int i = 1; i <= 23; ++i) {
    if (i % 3 == 0) continue;
    bool skip = false;
    for (int r : removed) skip = skip || r == i;
    if (!skip) out.push_back(i == 1 ? "x" : "x^" + std::to_string(i));
  }
  return out;
}

CodeParams P(std::size_t n, std::size_t k, std::size_t d) { return {n, k, d}; }

std::vector<Table> build() {
  std::vector<Table> t;
  const std::map<std::string, std::string> id_x{{"x", "x"}};

  t.push_back({"c18-i", "GF(2)C18, sigma = id, D(x) = 1+x+x^2+x^3+x^4+x^5+x^8+x^11", "cyclic:18", 2, id_x,
               "1 + x + x^2 + x^3 + x^4 + x^5 + x^8 + x^11",
               {
                   {"S1", powers({1, 5, 7, 9, 11, 13, 15, 17}), P(18, 8, 6), false, P(18, 10, 4), {}, {}},
                   {"S2 = S1 - x^13", powers({1, 5, 7, 9, 11, 15, 17}), P(18, 7, 6), false, P(18, 11, 3), {}, {}},
                   {"S3 = S2 - x^7", powers({1, 5, 9, 11, 15, 17}), P(18, 6, 6), false, P(18, 12, 2), {}, {}},
                   {"S4 = S3 - x^9", powers({1, 5, 11, 15, 17}), P(18, 5, 6), false, P(18, 13, 2), {}, {}},
                   {"S1'", powers({1, 5, 9, 13}), P(18, 4, 8), false, P(18, 14, 2), {}, {}},
               }});

  t.push_back({"c18-ii", "GF(2)C18, sigma(x) = x^2, D(x) = 1+x+x^3+x^4+x^7+x^9+x^13+x^16+x^17", "cyclic:18", 2,
               {{"x", "x^2"}}, "1 + x + x^3 + x^4 + x^7 + x^9 + x^13 + x^16 + x^17",
               {
                   {"S1", powers({1, 3, 5, 7, 9, 11, 13, 15, 17}), P(18, 9, 5), false, P(18, 9, 5), {}, {}},
                   {"S2", powers({1, 3, 5, 7, 9, 11, 13, 17}), P(18, 8, 5), false, P(18, 10, 3), {}, {}},
                   {"S3", powers({1, 3, 5, 7, 9, 13, 17}), P(18, 7, 5), true, P(18, 11, 3), {}, {}},
                   {"S4", powers({1, 5, 7, 9, 13, 17}), P(18, 6, 5), false, P(18, 12, 3), {}, {}},
                   {"S5", powers({1, 5, 9, 13, 17}), P(18, 5, 5), true, P(18, 13, 3), {}, {}},
                   {"S6", powers({1, 5, 9, 13}), P(18, 4, 8), false, P(18, 14, 2), {}, {}},
                   {"S7", powers({1, 5, 7, 9, 13}), P(18, 5, 6), false, P(18, 13, 2), {}, {}},
                   {"S8", powers({1, 5, 7, 9}), P(18, 4, 7), false, P(18, 14, 2), {}, {}},
                   {"S9", powers({1, 5, 9}), P(18, 3, 9), true, P(18, 15, 1), {}, {}},
                   {"S10 = S8 - x", powers({5, 7, 9}), P(18, 3, 8), true, P(18, 15, 1), {}, {}},
                   {"S10 = S8 - x^5", powers({1, 7, 9}), P(18, 3, 8), true, P(18, 15, 1), {}, {}},
                   {"S11", powers({1, 5, 7}), P(18, 3, 7), true, P(18, 15, 1), {}, {}},
                   {"S12", powers({1, 5}), P(18, 2, 9), true, P(18, 16, 1), {}, {}},
               }});

  const std::string d1 = "1 + x + x^2 + x^3 + x^4 + x^6 + x^9";
  const std::string d3 = "1 + x + x^2 + x^3 + x^5 + x^8 + x^11";
  const auto odd7 = powers({1, 3, 5, 7, 9, 11, 13});
  t.push_back({"c14", "GF(2)C14, sigma = id, six derivations", "cyclic:14", 2, id_x, d1,
               {
                   {"D1", odd7, P(14, 7, 4), true, P(14, 7, 4), {}, d1},
                   {"D2", odd7, P(14, 7, 4), false, P(14, 7, 4), {}, "1 + x + x^2 + x^3 + x^4 + x^9"},
                   {"D3", odd7, P(14, 7, 3), true, P(14, 7, 3), {}, d3},
                   {"D4", powers({1, 3, 5, 7}), P(14, 4, 7), false, P(14, 10, 3), {},
                    "1 + x + x^3 + x^4 + x^5 + x^6 + x^9"},
                   {"D5", powers({1, 3, 5, 7, 9, 11}), P(14, 6, 4), true, P(14, 8, 3), {},
                    "1 + x + x^2 + x^4 + x^5 + x^8"},
                   {"D6", odd7, P(14, 7, 3), false, P(14, 7, 3), {}, "1 + x + x^2 + x^4 + x^5 + x^7 + x^10"},
               }});

  t.push_back({"c14-d1", "GF(2)C14, sigma = id, D1(x) = " + d1, "cyclic:14", 2, id_x, d1,
               {
                   {"{1,3,5,7,11,13}", powers({1, 3, 5, 7, 11, 13}), P(14, 6, 4), true, P(14, 8, 3), {}, {}},
                   {"{1,3,5,7,13}", powers({1, 3, 5, 7, 13}), P(14, 5, 5), true, P(14, 9, 3), {}, {}},
                   {"{1,3,5,11,13}", powers({1, 3, 5, 11, 13}), P(14, 5, 5), true, P(14, 9, 3), {}, {}},
                   {"{1,3,5,7}", powers({1, 3, 5, 7}), P(14, 4, 6), false, P(14, 10, 2), {}, {}},
                   {"{1,3,5,13}", powers({1, 3, 5, 13}), P(14, 4, 6), false, P(14, 10, 2), {}, {}},
                   {"{1,5,13}", powers({1, 5, 13}), P(14, 3, 6), false, P(14, 11, 1), {}, {}},
                   {"{1,3,5}", powers({1, 3, 5}), P(14, 3, 6), true, P(14, 11, 1), {}, {}},
                   {"{1,3,7,11}", powers({1, 3, 7, 11}), P(14, 4, 4), false, P(14, 10, 2), {}, {}},
                   {"{1,3,9,13}", powers({1, 3, 9, 13}), P(14, 4, 5), true, P(14, 10, 2), {}, {}},
                   {"{1,5}", powers({1, 5}), P(14, 2, 7), true, P(14, 12, 1), {}, {}},
               }});

  t.push_back({"c14-d3", "GF(2)C14, sigma = id, D3(x) = " + d3, "cyclic:14", 2, id_x, d3,
               {
                   {"{1,3,5,7,9,13}", powers({1, 3, 5, 7, 9, 13}), P(14, 6, 3), true, P(14, 8, 2), {}, {}},
                   {"{1,3,5,9,13}", powers({1, 3, 5, 9, 13}), P(14, 5, 3), true, P(14, 9, 2), {}, {}},
                   {"{1,3,5}", powers({1, 3, 5}), P(14, 3, 7), true, P(14, 11, 2), {}, {}},
                   {"{1,3,5,9}", powers({1, 3, 5, 9}), P(14, 4, 4), true, P(14, 10, 2), {}, {}},
                   {"{1,3,11,13}", powers({1, 3, 11, 13}), P(14, 4, 3), true, P(14, 10, 2), {}, {}},
                   {"{1,5}", powers({1, 5}), P(14, 2, 7), true, P(14, 12, 1), {}, {}},
               }});

  t.push_back({"c24", "GF(3)C24, sigma(x) = x^5, D(x) = 1+x+x^3+x^4+x^5+x^7+x^9+x^12+x^14", "cyclic:24", 3,
               {{"x", "x^5"}}, "1 + x + x^3 + x^4 + x^5 + x^7 + x^9 + x^12 + x^14",
               {
                   {"S1", c24_s1_minus({}), P(24, 16, 3), true, P(24, 8, 7), {}, {}},
                   {"S2", c24_s1_minus({1}), P(24, 15, 4), true, P(24, 9, 7), {}, {}},
                   {"S3", c24_s1_minus({2}), P(24, 15, 3), true, P(24, 9, 7), {}, {}},
                   {"S4", c24_s1_minus({1, 2}), P(24, 14, 4), false, P(24, 10, 6), {}, {}},
                   {"S5", c24_s1_minus({1, 4}), P(24, 14, 4), true, P(24, 10, 7), {}, {}},
                   {"S6", c24_s1_minus({1, 7}), P(24, 14, 5), true, P(24, 10, 7), {}, {}},
                   {"S7", c24_s1_minus({1, 19}), P(24, 14, 5), false, P(24, 10, 7), {}, {}},
                   {"S8", c24_s1_minus({1, 2, 7}), P(24, 13, 5), false, P(24, 11, 5), {}, {}},
                   {"S9", c24_s1_minus({1, 4, 7}), P(24, 13, 5), false, P(24, 11, 7), {}, {}},
                   {"S10", c24_s1_minus({7, 11, 14}), P(24, 13, 5), true, P(24, 11, 6), {}, {}},
                   {"S11", c24_s1_minus({1, 4, 7, 11}), P(24, 12, 6), false, P(24, 12, 6), {}, {}},
                   {"S12", c24_s1_minus({1, 4, 7, 14}), P(24, 12, 6), true, P(24, 12, 6), {}, {}},
                   {"S13", c24_s1_minus({1, 4, 7, 23}), P(24, 12, 5), true, P(24, 12, 5), {}, {}},
                   {"S14", c24_s1_minus({4, 7, 16, 23}), P(24, 12, 4), true, P(24, 12, 4), {}, {}},
                   {"S15", c24_s1_minus({1, 2, 4, 7, 14}), P(24, 11, 7), false, P(24, 13, 5), {}, {}},
                   {"S16", c24_s1_minus({1, 4, 7, 14, 23}), P(24, 11, 6), true, P(24, 13, 5), {}, {}},
                   {"S17", c24_s1_minus({1, 2, 4, 5, 7, 14}), P(24, 10, 7), true, P(24, 14, 5), {}, {}},
                   {"S18", powers({8, 10, 11, 16, 17, 19, 20, 22, 23}), P(24, 9, 8), true, P(24, 15, 3), {}, {}},
                   {"S19", powers({8, 10, 11, 13, 16, 19, 20, 22, 23}), P(24, 9, 7), true, P(24, 15, 3), {}, {}},
                   {"S20", powers({8, 10, 11, 16, 17, 19, 20, 23}), P(24, 8, 8), true, P(24, 16, 3), {}, {}},
                   {"S21", powers({8, 11, 16, 17, 19, 20, 23}), P(24, 7, 9), true, P(24, 17, 2), {}, {}},
                   {"S22", powers({11, 16, 17, 19, 20, 23}), P(24, 6, 9), true, P(24, 18, 2), {}, {}},
                   {"S23", powers({11, 16, 17, 19, 23}), P(24, 5, 9), true, P(24, 19, 1), {}, {}},
                   {"S24", powers({16, 17, 19, 23}), P(24, 4, 9), true, P(24, 20, 1), {}, {}},
               }});

  t.push_back({"d12", "GF(2)D12, sigma(a) = a^2, sigma(b) = ab", "dihedral:6", 2, {{"a", "a^2"}, {"b", "a*b"}},
               "a = 1 + a + a^3 + a^4 + a*b + a^2*b + a^4*b + a^5*b; "
               "b = a + a^2 + a^4 + a^5 + b + a^2*b + a^3*b + a^5*b",
               {
                   {"S1", {"a", "a^2", "a^3", "b"}, P(12, 4, 4), false, {}, true, {}},
                   {"S2", {"a^2", "a^3", "a^5", "a^2*b"}, P(12, 4, 4), false, {}, true, {}},
                   {"S3", {"a", "a^2", "a^5", "b"}, P(12, 4, 4), false, {}, true, {}},
                   {"S4", {"a^3", "a^5", "b", "a^2*b"}, P(12, 4, 4), false, {}, true, {}},
                   {"S5", {"a", "a^5", "b", "a^2*b"}, P(12, 4, 4), false, {}, true, {}},
               }});
  return t;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

const std::vector<Table>& tables() {
  static const std::vector<Table> t = build();
  return t;
}

const Table& table(const std::string& id) {
  for (const auto& t : tables())
    if (t.id == id) return t;
  throw SpecError("unknown table '" + id + "'");
}

GroupPtr table_group(const Table& t) {
  const auto parts = split(t.group, ':');
  const auto n = static_cast<std::uint32_t>(std::stoul(parts.at(1)));
  return parts.at(0) == "cyclic" ? make_cyclic(n) : make_dihedral(n);
}

TwistedDerivation<PrimeField> table_derivation(const Table& t, const std::string& derivation) {
  const auto g = table_group(t);
  const PrimeField f(t.prime);
  const auto sigma = *endo_from_images(g, t.sigma);
  if (g->family() == GroupFamily::cyclic) {
    auto d = cyclic_power_derivation(sigma, parse_element(g, f, derivation));
    if (!d) throw DomainError("table derivation rejected: " + d.rejection().detail);
    return *d;
  }
  GeneratorMap<PrimeField> fm{g, std::vector<GroupRingElement<PrimeField>>(g->generator_count(),
                                                                            GroupRingElement<PrimeField>(g, f))};
  for (const auto& part : split(derivation, ';')) {
    const auto eq = part.find('=');
    const auto gi = g->generator_index(trim(part.substr(0, eq)));
    if (!gi) throw SpecError("unknown generator in table derivation");
    fm.images[*gi] = parse_element(g, f, part.substr(eq + 1));
  }
  auto d = extend_from_generators(fm, sigma, sigma, f);
  if (!d) throw DomainError("table derivation rejected: " + d.rejection().detail);
  return *d;
}

bool row_matches(const Row& e, const CodeReport& a) {
  if (!(e.code == a.params) || e.lcd != a.lcd) return false;
  if (e.dual && !(*e.dual == a.dual)) return false;
  if (e.self_orthogonal && *e.self_orthogonal != a.self_orthogonal) return false;
  return true;
}

namespace {

std::vector<Element> resolve(const GroupPtr& g, const std::vector<std::string>& names) {
  std::vector<Element> out;
  for (const auto& s : names) out.push_back(g->parse_element(s));
  return out;
}

const PrintedMatrix& printed(const std::string& id) {
  for (const auto& m : printed_matrices())
    if (m.id == id) return m;
  throw SpecError("no printed matrix '" + id + "'");
}

// Which table row and derivation each printed matrix shows.
std::pair<const Table*, const Row*> printed_source(const std::string& id) {
  if (id == "c18-i") return {&table("c18-i"), &table("c18-i").rows[0]};
  if (id == "c18-ii") return {&table("c18-ii"), &table("c18-ii").rows[0]};
  if (id == "c14-d1") return {&table("c14"), &table("c14").rows[0]};
  if (id == "c14-d3") return {&table("c14"), &table("c14").rows[2]};
  if (id == "c24") return {&table("c24"), &table("c24").rows[0]};
  throw SpecError("no printed matrix '" + id + "'");
}

}  // namespace

std::vector<RowOutcome> reproduce(const Table& t, RowSource source) {
  const auto g = table_group(t);
  const PrimeField f(t.prime);
  std::vector<RowOutcome> out;

  // Printed-matrix rows keyed by element, for tables that have one.
  std::map<Element, Vector<PrimeField>> printed_rows;
  if (source == RowSource::printed_matrix) {
    const auto& m = printed(t.id);
    const auto [pt, prow] = printed_source(t.id);
    const auto pm = parse_matrix_text(f, m.text);
    const auto elems = resolve(g, prow->subset);
    for (std::size_t i = 0; i < elems.size() && i < pm.rows(); ++i) printed_rows[elems[i]] = pm.row_vector(i);
  }

  for (const auto& row : t.rows) {
    RowOutcome o{t.id, row, std::nullopt, {}, false};
    const auto d = table_derivation(t, row.derivation.empty() ? t.derivation : row.derivation);
    const auto subset = resolve(g, row.subset);
    CodeSource src{g->description(), d.sigma().describe(), row.derivation.empty() ? t.derivation : row.derivation,
                   row.subset};
    if (source == RowSource::derivation) {
      auto r = code_report(d, subset, src);
      if (r) o.actual = *r;
      else o.rejection = r.rejection().reason + ": " + r.rejection().detail;
    } else {
      std::vector<Vector<PrimeField>> rows;
      for (Element e : subset) {
        auto it = printed_rows.find(e);
        rows.push_back(it != printed_rows.end() ? it->second : d(e).coeffs());
      }
      auto m = Matrix<PrimeField>::from_rows(f, rows, g->order());
      if (rank(m) == m.rows()) o.actual = code_report(LinearCode(m, src));
      else o.rejection = "dependent rows in printed matrix";
    }
    o.pass = o.actual && row_matches(row, *o.actual);
    out.push_back(std::move(o));
  }
  return out;
}

Matrix<PrimeField> recomputed_matrix(const std::string& id) {
  const auto [t, row] = printed_source(id);
  const auto d = table_derivation(*t, row->derivation.empty() ? t->derivation : row->derivation);
  auto c = idd_code(d, resolve(table_group(*t), row->subset));
  return c->generator();
}

MatrixComparison compare_printed(const std::string& id) {
  const auto [t, row] = printed_source(id);
  const PrimeField f(t->prime);
  const auto pm = parse_matrix_text(f, printed(id).text);
  const auto cm = recomputed_matrix(id);
  MatrixComparison c{id, cm.rows(), cm.cols(), pm.rows() == cm.rows() && pm.cols() == cm.cols(), {}};
  if (!c.shape_ok) return c;
  const auto g = table_group(*t);
  for (std::size_t r = 0; r < cm.rows(); ++r)
    for (std::size_t k = 0; k < cm.cols(); ++k)
      if (!(pm(r, k) == cm(r, k))) c.diffs.push_back({r, k, pm(r, k).value(), cm(r, k).value(), g->name(static_cast<Element>(k))});
  return c;
}

std::string format_outcome(const RowOutcome& o) {
  std::string s = (o.pass ? "PASS " : "FAIL ") + o.table + " " + o.expected.label + ": expected " +
                  to_string(o.expected.code) + (o.expected.lcd ? " LCD" : " non-LCD");
  if (o.expected.dual) s += " dual " + to_string(*o.expected.dual);
  if (o.expected.self_orthogonal) s += *o.expected.self_orthogonal ? " self-orthogonal" : "";
  if (o.actual) {
    s += "; got " + to_string(o.actual->params) + (o.actual->lcd ? " LCD" : " non-LCD") + " dual " +
         to_string(o.actual->dual) + (o.actual->self_orthogonal ? " self-orthogonal" : "");
  } else {
    s += "; rejected: " + o.rejection;
  }
  return s;
}

}  // namespace tder::golden
