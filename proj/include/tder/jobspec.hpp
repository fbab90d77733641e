#pragma once

// JSON job files shared by the command-line tool and its tests.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tder/field.hpp"
#include "tder/group.hpp"

namespace tder {

struct JobSpec {
  GroupPtr group;
  AnyField field = RationalField{};
  std::map<std::string, std::string> sigma;  // empty: identity
  std::optional<std::map<std::string, std::string>> tau;
  std::optional<std::map<std::string, std::string>> derivation;  // generator -> element
  std::optional<std::string> cyclic_seed;
  std::vector<std::vector<std::string>> subsets;
  std::optional<std::string> beta;
};

// Accepts {"family": "cyclic"|"dihedral"|"abelian"|"table", ...} or a
// short name such as "C18", "D12", "C8xC3".
GroupPtr make_group(const nlohmann::json& spec);
GroupPtr parse_group_name(std::string_view name);

JobSpec parse_job(const nlohmann::json& j);
JobSpec load_job(const std::string& path);

// "a=a^2, b=a*b"
std::map<std::string, std::string> parse_image_list(std::string_view text);
// "x, x^5, x^7"
std::vector<std::string> parse_subset(std::string_view text);

}  // namespace tder
