#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "klr/cli.hpp"

using namespace klr;
using namespace klr::cli;
using nlohmann::json;

namespace {

json sl2_config(int level) {
  json j;
  j["schema"] = "klr-verify-config/1";
  j["cartan"] = {{"labels", {"1"}}, {"matrix", {{2}}}};
  j["lambda"] = {{"1", level}};
  j["cases"] = json::array();
  return j;
}

json strip_volatile(json rep) {
  rep.erase("timestamp");
  for (auto& e : rep.at("cases")) e.erase("elapsed_ms");
  return rep;
}

std::string write_temp(const json& j, const std::string& name) {
  const auto path =
      (std::filesystem::temp_directory_path() / name).string();
  std::ofstream(path) << j.dump(2);
  return path;
}

int run_main(std::vector<std::string> args) {
  std::vector<char*> argv;
  args.insert(args.begin(), "klr_verify");
  for (auto& a : args) argv.push_back(a.data());
  return cli_main(static_cast<int>(argv.size()), argv.data());
}

} // namespace

TEST_CASE("config validation failures exit with code 2") {
  json bad = sl2_config(1);
  bad["cartan"] = {{"labels", {"1", "2"}},
                   {"matrix", {{2, 0}, {-1, 2}}}};
  bad["cases"].push_back(
      {{"beta", json::object()}, {"i", "1"}, {"checks", {"cyclotomic"}}});
  CHECK_THROWS_WITH_AS(parse_config(bad),
                       "cartan axiom (iii): a_ij=0 iff a_ji=0 violated",
                       ConfigError);
  CHECK(run_main({"run", write_temp(bad, "bad_cartan.json")}) == 2);
  CHECK(run_main({"run", "/nonexistent/config.json"}) == 2);

  json unknown = sl2_config(1);
  unknown["cases"].push_back(
      {{"beta", json::object()}, {"i", "1"}, {"checks", {"bogus"}}});
  CHECK_THROWS_AS(parse_config(unknown), ConfigError);

  json nolabel = sl2_config(1);
  nolabel["cases"].push_back(
      {{"beta", {{"7", 1}}}, {"i", "1"}, {"checks", {"cyclotomic"}}});
  CHECK_THROWS_AS(parse_config(nolabel), ConfigError);
}

TEST_CASE("run passes on a small config and reports are deterministic") {
  json cj = sl2_config(1);
  cj["cases"].push_back(
      {{"beta", json::object()},
       {"i", "1"},
       {"checks", {"mackey", "cyclotomic", "rho", "zigzag", "eq2",
                   "projectivity", "simples"}}});
  cj["cases"].push_back(
      {{"beta", {{"1", 1}}},
       {"i", "1"},
       {"checks", {"cyclotomic", "zigzag", "grin", "simples"}}});
  const VerifyConfig cfg = parse_config(cj);
  int code1 = -1, code2 = -1;
  const json r1 = run_cases(cfg, {}, &code1);
  const json r2 = run_cases(cfg, {}, &code2);
  CHECK(code1 == 0);
  CHECK(code2 == 0);
  CHECK(strip_volatile(r1).dump() == strip_volatile(r2).dump());
  CHECK(r1.at("summary").at("fail") == 0);
  // every entry carries the mandatory fields
  for (const auto& e : r1.at("cases")) {
    CHECK(e.contains("id"));
    CHECK(e.contains("status"));
    CHECK(e.contains("certificates"));
  }
}

TEST_CASE("parallel execution matches the sequential report") {
  json cj = sl2_config(2);
  cj["cases"].push_back(
      {{"beta", json::object()},
       {"i", "1"},
       {"checks", {"cyclotomic", "rho", "zigzag", "simples"}}});
  cj["cases"].push_back(
      {{"beta", {{"1", 1}}},
       {"i", "1"},
       {"checks", {"cyclotomic", "rho", "simples"}}});
  const VerifyConfig cfg = parse_config(cj);
  int c1 = -1, c2 = -1;
  const json seq = run_cases(cfg, {}, &c1);
  RunOptions par;
  par.jobs = 3;
  const json conc = run_cases(cfg, par, &c2);
  CHECK(c1 == 0);
  CHECK(c2 == 0);
  CHECK(strip_volatile(seq).dump() == strip_volatile(conc).dump());
}

TEST_CASE("flipped unit sign fails a zigzag where the sign is stored") {
  // level 2 at beta = 0: the cell one step up sits at lambda_i = 0
  json cj = sl2_config(2);
  cj["cases"].push_back(
      {{"beta", json::object()}, {"i", "1"}, {"checks", {"zigzag"}}});
  const VerifyConfig cfg = parse_config(cj);
  RunOptions flip;
  flip.flip_eta_sign = true;
  int code = -1;
  const json rep = run_cases(cfg, flip, &code);
  CHECK(code == 1);
  CHECK(rep.at("summary").at("fail") == 1);
  CHECK(rep.at("cases")[0].contains("witness"));
}

TEST_CASE("a zero resource cap aborts with exit 3") {
  json cj = sl2_config(1);
  cj["cases"].push_back(
      {{"beta", json::object()}, {"i", "1"}, {"checks", {"cyclotomic"}}});
  const VerifyConfig cfg = parse_config(cj);
  RunOptions opts;
  opts.cap_seconds = 0;
  int code = -1;
  const json rep = run_cases(cfg, opts, &code);
  CHECK(code == 3);
  CHECK(rep.at("cases")[0].at("status") == "skip");
}

TEST_CASE("dims table reports quotient and kernel dimensions") {
  json cj = sl2_config(2);
  cj["cases"].push_back(
      {{"beta", {{"1", 2}}}, {"i", "1"}, {"checks", {"cyclotomic"}}});
  cj["cases"].push_back(
      {{"beta", json::object()}, {"i", "1"}, {"checks", {"cyclotomic"}}});
  const VerifyConfig cfg = parse_config(cj);
  const json t = dims_table(cfg);
  CHECK(t.at("dims")[0].at("quotient").at("dim") == 4);
  CHECK(t.at("dims")[1].at("quotient").at("dim") == 1);
  // at beta = 0 both kernels are the one-step-up algebra seen one-sidedly
  CHECK(t.at("dims")[1].at("e_kernel_dim") == 2);
  CHECK(t.at("dims")[1].at("f_kernel_dim") == 2);
}

TEST_CASE("explain prints a stored case and rejects unknown ids") {
  json cj = sl2_config(1);
  cj["cases"].push_back(
      {{"beta", json::object()}, {"i", "1"}, {"checks", {"cyclotomic"}}});
  const std::string cpath = write_temp(cj, "explain_config.json");
  const auto rpath =
      (std::filesystem::temp_directory_path() / "explain_report.json")
          .string();
  CHECK(run_main({"run", cpath, "--json", rpath}) == 0);
  CHECK(run_main({"explain", "cyclotomic|beta=[0]|i=1", "--report", rpath}) ==
        0);
  CHECK(run_main({"explain", "no-such-case", "--report", rpath}) == 2);
}
