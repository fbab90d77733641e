#include "tder/jobspec.hpp"

#include <fstream>
#include <sstream>

namespace tder {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::uint32_t positive(const nlohmann::json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 1 || j.get<std::int64_t>() > 100000)
    throw SpecError(std::string(what) + " must be a positive integer");
  return j.get<std::uint32_t>();
}

std::map<std::string, std::string> image_map(const nlohmann::json& j, const char* what) {
  if (j.is_string()) return parse_image_list(j.get<std::string>());
  if (!j.is_object()) throw SpecError(std::string(what) + " must be an object of generator images");
  std::map<std::string, std::string> m;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_string()) throw SpecError(std::string(what) + "." + k + " must be a string");
    m[k] = v.get<std::string>();
  }
  return m;
}

std::vector<std::string> subset_of(const nlohmann::json& j) {
  if (j.is_string()) return parse_subset(j.get<std::string>());
  if (!j.is_array()) throw SpecError("subset must be an array of element names");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw SpecError("subset entries must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace

GroupPtr parse_group_name(std::string_view name) {
  const std::string s = trim(name);
  auto number = [&](std::string_view digits) -> std::uint32_t {
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
      throw SpecError("bad group name '" + s + "'");
    return static_cast<std::uint32_t>(std::stoul(std::string(digits)));
  };
  if (s.empty()) throw SpecError("empty group name");
  if (s[0] == 'D') {
    const auto order = number(std::string_view(s).substr(1));
    if (order % 2) throw SpecError("dihedral group order must be even: '" + s + "'");
    return make_dihedral(order / 2);
  }
  if (s[0] == 'C') {
    std::vector<std::uint32_t> factors;
    std::string_view rest = s;
    while (!rest.empty()) {
      if (rest[0] != 'C') throw SpecError("bad group name '" + s + "'");
      const auto x = rest.find('x');
      factors.push_back(number(rest.substr(1, x == std::string_view::npos ? rest.npos : x - 1)));
      rest = x == std::string_view::npos ? std::string_view{} : rest.substr(x + 1);
    }
    return factors.size() == 1 ? make_cyclic(factors[0]) : make_abelian(factors);
  }
  throw SpecError("unknown group name '" + s + "'");
}

GroupPtr make_group(const nlohmann::json& spec) {
  if (spec.is_string()) return parse_group_name(spec.get<std::string>());
  if (!spec.is_object() || !spec.contains("family")) throw SpecError("group needs a \"family\"");
  const auto family = spec.at("family").get<std::string>();
  if (family == "cyclic") return make_cyclic(positive(spec.at("n"), "group.n"));
  if (family == "dihedral") return make_dihedral(positive(spec.at("n"), "group.n"));
  if (family == "abelian") {
    std::vector<std::uint32_t> f;
    for (const auto& x : spec.at("factors")) f.push_back(positive(x, "group.factors"));
    return make_abelian(f);
  }
  if (family == "table") {
    const auto names = spec.at("elements").get<std::vector<std::string>>();
    std::vector<std::vector<Element>> table;
    for (const auto& row : spec.at("table")) {
      std::vector<Element> r;
      for (const auto& x : row) {
        if (!x.is_number_integer() || x.get<std::int64_t>() < 0) throw SpecError("table entries must be indices");
        r.push_back(x.get<Element>());
      }
      table.push_back(std::move(r));
    }
    return make_table_group(names, table, spec.at("generators").get<std::vector<std::string>>());
  }
  throw SpecError("unknown group family '" + family + "'");
}

JobSpec parse_job(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw SpecError("job spec must be a JSON object");
    static const std::vector<std::string> known{"group", "field", "sigma", "tau", "derivation",
                                                "cyclic_seed", "subsets", "subset", "beta"};
    for (const auto& [k, v] : j.items())
      if (std::find(known.begin(), known.end(), k) == known.end()) throw SpecError("unknown key '" + k + "'");
    JobSpec s;
    if (!j.contains("group")) throw SpecError("job spec needs a \"group\"");
    s.group = make_group(j.at("group"));
    if (j.contains("field")) {
      const auto& f = j.at("field");
      s.field = parse_field(f.is_number_integer() ? std::to_string(f.get<std::int64_t>()) : f.get<std::string>());
    }
    if (j.contains("sigma")) s.sigma = image_map(j.at("sigma"), "sigma");
    if (j.contains("tau")) s.tau = image_map(j.at("tau"), "tau");
    if (j.contains("derivation")) s.derivation = image_map(j.at("derivation"), "derivation");
    if (j.contains("cyclic_seed")) s.cyclic_seed = j.at("cyclic_seed").get<std::string>();
    if (s.derivation && s.cyclic_seed) throw SpecError("give either \"derivation\" or \"cyclic_seed\", not both");
    if (j.contains("subset")) s.subsets.push_back(subset_of(j.at("subset")));
    if (j.contains("subsets"))
      for (const auto& x : j.at("subsets")) s.subsets.push_back(subset_of(x));
    if (j.contains("beta")) s.beta = j.at("beta").get<std::string>();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("job spec: ") + e.what());
  }
}

JobSpec load_job(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open " + path);
  try {
    return parse_job(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecError(path + ": " + e.what());
  }
}

std::map<std::string, std::string> parse_image_list(std::string_view text) {
  std::map<std::string, std::string> m;
  std::stringstream in{std::string(text)};
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw SpecError("image '" + trim(item) + "' needs the form gen=word");
    const auto k = trim(std::string_view(item).substr(0, eq));
    if (m.count(k)) throw SpecError("generator '" + k + "' given twice");
    m[k] = trim(std::string_view(item).substr(eq + 1));
  }
  return m;
}

std::vector<std::string> parse_subset(std::string_view text) {
  std::vector<std::string> out;
  std::stringstream in{std::string(text)};
  std::string item;
  while (std::getline(in, item, ',')) {
    auto t = trim(item);
    if (t.empty()) throw SpecError("empty subset entry");
    out.push_back(t);
  }
  return out;
}

}  // namespace tder
