#pragma once

// Subcommands of the command-line tool, as functions returning both a text
// and a JSON rendering plus the exit code.

#include <optional>
#include <string>

#include "json.hpp"
#include "tder/jobspec.hpp"

namespace tder {

struct CommandResult {
  int exit_code = 0;  // 0 ok, 1 rejected, 2 bad input
  nlohmann::json json;
  std::string text;
};

struct Overrides {
  std::optional<std::string> field;
  std::optional<std::string> sigma;  // "a=a^2,b=a*b"
  std::optional<std::string> tau;
  std::optional<std::string> subset;  // "x,x^5"
};

void apply_overrides(JobSpec& spec, const Overrides& o);

CommandResult cmd_validate(const JobSpec& spec);
CommandResult cmd_derive(const JobSpec& spec);
CommandResult cmd_space(const JobSpec& spec);
CommandResult cmd_classes(const JobSpec& spec);
CommandResult cmd_inner(const JobSpec& spec);
CommandResult cmd_predict(const JobSpec& spec, bool check);
CommandResult cmd_idd(const JobSpec& spec);
CommandResult cmd_sweep(const JobSpec& spec, std::size_t k, std::size_t max_candidates, std::uint64_t seed);
// Recomputes a report emitted by cmd_idd from the same job spec.
CommandResult cmd_check_report(const JobSpec& spec, const nlohmann::json& report);
// id: a table id or "all"; source: "derivation" or "printed".
CommandResult cmd_reproduce(const std::string& id, const std::string& source);

// Runs f, mapping SpecError and DomainError to exit code 2.
template <class Fn>
CommandResult guarded(Fn&& f) {
  try {
    return f();
  } catch (const SpecError& e) {
    return {2, {{"error", e.what()}}, std::string("error: ") + e.what() + "\n"};
  } catch (const DomainError& e) {
    return {2, {{"error", e.what()}}, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace tder
