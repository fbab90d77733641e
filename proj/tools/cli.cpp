#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "tder/commands.hpp"

using namespace tder;

namespace {

int emit(const CommandResult& r, const std::string& format, const std::string& out) {
  std::string body = format == "json" ? r.json.dump(2) + "\n" : r.text;
  if (out.empty()) {
    (r.exit_code == 2 ? std::cerr : std::cout) << body;
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "error: cannot write " << out << "\n";
      return 2;
    }
    f << body;
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted derivations of group rings and IDD codes"};
  app.require_subcommand(1);

  std::string format = "text", out;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out, "Write the report to a file");

  std::string spec_path;
  Overrides ov;
  auto job = [&](CLI::App* c) {
    c->add_option("spec", spec_path, "Job spec (JSON)")->required();
    c->add_option("--field", ov.field, "Override the field, e.g. GF(3) or Q");
    c->add_option("--sigma", ov.sigma, "Override sigma, e.g. a=a^2,b=a*b");
    c->add_option("--tau", ov.tau, "Override tau");
    // Options after the subcommand work too.
    c->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    c->add_option("--out", out, "Write the report to a file");
    return c;
  };

  auto* validate = job(app.add_subcommand("validate", "Check a job spec"));
  auto* derive = job(app.add_subcommand("derive", "Extend generator images to a derivation table"));
  auto* space = job(app.add_subcommand("space", "Dimension and basis of all (sigma,tau)-derivations"));
  auto* classes = job(app.add_subcommand("classes", "Twisted conjugacy classes"));
  auto* inner = job(app.add_subcommand("inner", "Inner derivations, witnesses"));
  bool check = false;
  auto* predict = job(app.add_subcommand("predict", "Closed-form predictions for dihedral groups"));
  predict->add_flag("--check", check, "Also compute the values and compare");
  auto* idd = job(app.add_subcommand("idd", "IDD code reports"));
  idd->add_option("--subset", ov.subset, "Comma-separated element names");
  std::size_t k = 1, max_candidates = 100000;
  std::uint64_t seed = 0;
  auto* sweep = job(app.add_subcommand("sweep", "Rank subsets of size k by minimum distance"));
  sweep->add_option("-k,--k", k, "Subset size")->required();
  sweep->add_option("--max", max_candidates, "Candidate budget");
  sweep->add_option("--seed", seed, "Sampling seed");
  std::string report_path;
  auto* check_report = job(app.add_subcommand("check-report", "Recompute a JSON report from its job spec"));
  check_report->add_option("report", report_path, "Report emitted by idd --format json")->required();

  std::string table_id, source = "derivation";
  auto* reproduce = app.add_subcommand("reproduce", "Recompute the reference code tables");
  reproduce->add_option("table", table_id, "Table id or 'all'")->required();
  reproduce->add_option("--source", source, "derivation or printed")->check(CLI::IsMember({"derivation", "printed"}));
  reproduce->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  reproduce->add_option("--out", out, "Write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  const auto result = guarded([&]() -> CommandResult {
    if (reproduce->parsed()) return cmd_reproduce(table_id, source);
    auto spec = load_job(spec_path);
    apply_overrides(spec, ov);
    if (validate->parsed()) return cmd_validate(spec);
    if (derive->parsed()) return cmd_derive(spec);
    if (space->parsed()) return cmd_space(spec);
    if (classes->parsed()) return cmd_classes(spec);
    if (inner->parsed()) return cmd_inner(spec);
    if (predict->parsed()) return cmd_predict(spec, check);
    if (idd->parsed()) return cmd_idd(spec);
    if (sweep->parsed()) return cmd_sweep(spec, k, max_candidates, seed);
    if (check_report->parsed()) {
      std::ifstream in(report_path);
      if (!in) throw SpecError("cannot open " + report_path);
      nlohmann::json r;
      try {
        r = nlohmann::json::parse(in);
      } catch (const nlohmann::json::parse_error& e) {
        throw SpecError(report_path + ": " + e.what());
      }
      return cmd_check_report(spec, r);
    }
    throw SpecError("no subcommand");
  });
  return emit(result, format, out);
}
