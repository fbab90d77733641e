#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "doctest.h"
#include "tder/commands.hpp"
#include "tder/jobspec.hpp"

using namespace tder;
using nlohmann::json;

namespace {

std::string data(const std::string& name) { return std::string(TDER_TEST_DATA) + "/" + name; }

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(TDER_CLI) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

JobSpec job(const json& j) { return parse_job(j); }

}  // namespace

TEST_CASE("job spec parsing") {
  const auto s = load_job(data("d12_sigma1.json"));
  CHECK(s.group->order() == 12);
  CHECK(s.sigma.at("a") == "a^2");
  CHECK(s.subsets.size() == 2);
  CHECK(parse_group_name("C8xC3")->order() == 24);
  CHECK(parse_group_name("D12")->dihedral_n() == 6);
  CHECK_THROWS_AS(parse_group_name("Q8"), SpecError);
  CHECK(parse_image_list("a=a^2, b=a*b") == std::map<std::string, std::string>{{"a", "a^2"}, {"b", "a*b"}});
  CHECK(parse_subset("x, x^5,x^7") == std::vector<std::string>{"x", "x^5", "x^7"});
  CHECK_THROWS_AS(job({{"group", "C4"}, {"colour", 1}}), SpecError);
  CHECK_THROWS_AS(job({{"field", "GF(2)"}}), SpecError);
  CHECK_THROWS_AS(job({{"group", "C4"}, {"field", "GF(4)"}}), SpecError);
  CHECK_THROWS_AS(load_job(data("nothing_here.json")), SpecError);
  const auto t = job({{"group", {{"family", "table"},
                                 {"elements", {"e", "u"}},
                                 {"table", {{0, 1}, {1, 0}}},
                                 {"generators", {"u"}}}},
                      {"field", "GF(2)"}});
  CHECK(t.group->order() == 2);
}

TEST_CASE("predict on D12 in characteristic 2") {
  auto s = load_job(data("d12_sigma1.json"));
  const auto r = cmd_predict(s, true);
  CHECK(r.exit_code == 0);
  CHECK(r.json["dim_derivations"] == 16);
  CHECK(r.json["class_count"] == 6);
  CHECK(r.json["dim_inner"] == 6);
  CHECK(r.json["outer_nonzero"] == true);
}

TEST_CASE("idd on the C18 spec") {
  const auto r = cmd_idd(load_job(data("c18_i.json")));
  REQUIRE(r.exit_code == 0);
  const auto& rep = r.json["reports"][0];
  CHECK(rep["n"] == 18);
  CHECK(rep["k"] == 8);
  CHECK(rep["d"] == 6);
  CHECK(rep["lcd"] == false);
  CHECK(rep["dual"] == json{{"n", 18}, {"k", 10}, {"d", 4}});
  CHECK(rep["matrix"].get<std::string>().rfind("1 1 1 1 1 1 0 0 1 0 0 1 0 0 0 0 0 0\n", 0) == 0);

  const auto back = cmd_check_report(load_job(data("c18_i.json")), r.json);
  CHECK(back.exit_code == 0);
  auto tampered = r.json;
  tampered["reports"][0]["d"] = 7;
  CHECK(cmd_check_report(load_job(data("c18_i.json")), tampered).exit_code == 1);
}

TEST_CASE("exit codes of the command functions") {
  CHECK(guarded([] { return cmd_validate(load_job(data("d6_bad_sigma.json"))); }).exit_code == 1);
  CHECK(guarded([] { return cmd_derive(load_job(data("d6_minus1_gf3.json"))); }).exit_code == 1);
  CHECK(guarded([] { return cmd_validate(load_job(data("malformed.json"))); }).exit_code == 2);
  auto s = load_job(data("c18_i.json"));
  apply_overrides(s, Overrides{{}, {}, {}, std::string("x, x^2")});
  CHECK(guarded([&] { return cmd_idd(s); }).exit_code == 1);
  auto q = load_job(data("d6_gf7.json"));
  apply_overrides(q, Overrides{std::string("GF(2)"), {}, {}, {}});
  CHECK(cmd_space(q).json["field"] == "GF(2)");
  CHECK(cmd_space(q).exit_code == 0);
}

TEST_CASE("space, classes and inner") {
  const auto s = load_job(data("d12_sigma1.json"));
  CHECK(cmd_space(s).json["dimension"] == 16);
  CHECK(cmd_classes(s).json["count"] == 6);
  const auto g7 = load_job(data("d6_gf7.json"));
  const auto inner = cmd_inner(g7);
  CHECK(inner.exit_code == 0);
  CHECK(inner.json["dimension"] == 3);
  CHECK(inner.json["basis_witnesses"].size() == 3);
}

TEST_CASE("binary: formats, files and determinism") {
  const auto spec = data("c18_i.json");
  const auto a = run("idd " + spec + " --format json");
  const auto b = run("idd " + spec + " --format json");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run("--format json idd " + spec).out == a.out);
  const auto parsed = json::parse(a.out);
  CHECK(parsed["reports"][0]["d"] == 6);

  const auto text = run("classes " + data("d12_sigma1.json"));
  CHECK(text.code == 0);
  CHECK(text.out == run("classes " + data("d12_sigma1.json")).out);

  const auto dir = std::filesystem::temp_directory_path() / "tder_cli_test";
  std::filesystem::create_directories(dir);
  const auto report = (dir / "report.json").string();
  CHECK(run("idd " + spec + " --format json --out " + report).code == 0);
  std::ifstream in(report);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(json::parse(ss.str()) == parsed);
  CHECK(run("check-report " + spec + " " + report).code == 0);
  std::filesystem::remove_all(dir);

  CHECK(run("predict " + data("d12_sigma1.json") + " --check").code == 0);
  CHECK(run("validate " + data("d6_bad_sigma.json")).code == 1);
  CHECK(run("derive " + data("d6_minus1_gf3.json")).code == 1);
  CHECK(run("validate " + data("malformed.json")).code == 2);
  CHECK(run("validate").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("idd " + spec + " --subset x,x^2").code == 1);
  CHECK(run("space " + spec + " --field 'GF(3)' --format json").code == 0);
  CHECK(run("sweep " + data("c18_i.json") + " -k 2 --max 200 --format json").code == 0);
}

TEST_CASE("binary: reproduce") {
  const auto d12 = run("reproduce d12 --format json");
  CHECK(d12.code == 0);
  const auto c24 = run("reproduce c24");
  CHECK(c24.code == 1);
  CHECK(c24.out.find("x^14") != std::string::npos);
  CHECK(run("reproduce c24 --source printed").code == 1);
  CHECK(run("reproduce c18-i --source printed").code == 0);
  CHECK(run("reproduce nope").code == 2);
}
