#include "llv/errors.hpp"
#include "llv/report.hpp"
#include "llv/scenario.hpp"
#include "llv/suites.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace llv;

namespace {

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("llv_test_" + name);
  std::ofstream(path, std::ios::binary) << contents;
  return path;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_verify(const std::string& args) {
  const std::string cmd = std::string(LLV_VERIFY_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("minimal scenario") {
  const Scenario s = parse_scenario(R"js({"lattice": "kummer(2)", "suite": "sl2", "seed": 1})js");
  CHECK(s.lattice.rank() == 7);
  CHECK(s.suites == std::vector<std::string>{"sl2"});
  CHECK(s.seed == 1);
  CHECK(s.bound == 20);
}

TEST_CASE("scenario fields") {
  const Scenario s = parse_scenario(R"js({
    "lattice": {"gram": [[0, 1, 0], [1, 0, 0], [0, 0, "-1/3"]]},
    "suite": ["sym", "twistor"],
    "seed": 18446744073709551615,
    "bound": 7,
    "degrees": [2, 4],
    "allow_large_n": true,
    "samples": 3,
    "period_points": [{"x": [1, 1, 0], "y": [0, 0, 0], "omega": ["1/3", 0, 0]}],
    "isometries": [[[1, 0, 0], [0, 1, 0], [0, 0, 1]]],
    "chern_data": [{"r": 2, "lambda_x": [1, 0, 0], "lambda_y": [0, "5/7", 0]}],
    "sp_params": [{"n": 2, "e": 2}]
  })js");
  CHECK(s.lattice.gram()(2, 2) == Rational(-1, 3));
  CHECK(s.seed == 18446744073709551615ull);
  CHECK(s.degrees == std::vector<unsigned>{2, 4});
  CHECK(s.samples == 3u);
  REQUIRE(s.period_points.size() == 1);
  CHECK((*s.period_points[0].omega)[0] == Rational(1, 3));
  CHECK(s.chern_data[0].lambda_y[1] == Rational(5, 7));
  CHECK(s.sp_params[0].E() == 6);
}

TEST_CASE("scenario errors name the field") {
  auto message = [](const std::string& text) {
    try {
      parse_scenario(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message(R"js({"latice": "kummer(2)"})js").find("latice") != std::string::npos);
  CHECK(message(R"js({"lattice": "kummer(2)", "suite": "nope"})js").find("nope") != std::string::npos);
  CHECK(message(R"js({"lattice": "kummer(2)", "degrees": [4]})js").find("allow_large_n") != std::string::npos);
  CHECK(message(R"js({"lattice": "kummer(2)", "degrees": [6], "allow_large_n": true})js").find("degrees") !=
        std::string::npos);
  CHECK(message(R"js({"lattice": "kummer(2)", "bound": 0})js").find("bound") != std::string::npos);
  CHECK(message(R"js({"lattice": "kummer(2)", "chern_data": [{"r": 1, "lambda_x": [1], "lambda_y": [1]}]})js")
            .find("chern_data[0].lambda_x") != std::string::npos);
  CHECK(message(R"js({"lattice": "kummer(2)", "seed": 0.5})js").find("seed") != std::string::npos);
  CHECK(message(R"js({"lattice": "kummer(2)", "isometries": [[["1/0"]]]})js").find("isometries[0]") != std::string::npos);
  CHECK(message("{\n  \"lattice\": \"kummer(2)\",\n  oops\n}").find("line 3") != std::string::npos);
  CHECK(message(R"js({"suite": "sl2"})js").find("lattice") != std::string::npos);
}

TEST_CASE("reports round-trip and count") {
  Report empty{"1.0", 5, {}};
  const std::string text = emit_report(empty, ReportFormat::Text);
  CHECK(text.find("0 checks, 0 passed, 0 failed") != std::string::npos);
  CHECK(parse_report(emit_report(empty, ReportFormat::Structured)) == empty);

  Report r{"1.0", 7, {{"sl2", "a", fnv1a_hex("a"), true, "ok", "sl2: [e,f]=h"},
                      {"sym", "b", fnv1a_hex("b"), false, "bad \"quote\"", "plumbing"}}};
  CHECK(r.passed_count() == 1);
  CHECK(r.failed_count() == 1);
  CHECK(parse_report(emit_report(r, ReportFormat::Structured)) == r);
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK_THROWS_AS(parse_report("{}"), ParseError);
  std::string tampered = emit_report(r, ReportFormat::Structured);
  tampered.replace(tampered.find("\"passed\": 1"), 11, "\"passed\": 2");
  CHECK_THROWS_AS(parse_report(tampered), ParseError);
}

TEST_CASE("suite runs are deterministic and anchored") {
  Scenario s = parse_scenario(R"js({"lattice": "kummer(2)", "seed": 42, "samples": 2, "degrees": [2]})js");
  const Report a = run_suites(s);
  const Report b = run_suites(s);
  CHECK(emit_report(a, ReportFormat::Structured) == emit_report(b, ReportFormat::Structured));
  CHECK(a.all_passed());
  for (const auto& rec : a.records) CHECK_FALSE(rec.anchor.empty());
  // one suite alone draws the same values as within the full run
  s.suites = {"fujiki"};
  const Report only = run_suites(s);
  std::vector<CheckRecord> from_full;
  for (const auto& rec : a.records)
    if (rec.suite == "fujiki") from_full.push_back(rec);
  CHECK(only.records == from_full);
  s.seed = 43;
  CHECK(run_suites(s).records != only.records);
}

TEST_CASE("fujiki suite reports the model constant") {
  const Scenario s = parse_scenario(R"js({"lattice": "kummer(2)", "suite": "fujiki", "seed": 1, "degrees": [2]})js");
  const Report r = run_suites(s);
  REQUIRE_FALSE(r.records.empty());
  CHECK(r.records.front().witness == "model constant 3");
}

TEST_CASE("verify exit codes") {
  const auto ok = temp_file("ok.json", R"js({"lattice": "kummer(2)", "suite": "sl2", "seed": 1})js");
  const auto bad_key = temp_file("bad.json", R"js({"latice": "kummer(2)"})js");
  // a definite lattice has no isotropic vectors, so the isotropic checks fail
  const auto failing =
      temp_file("fail.json", R"js({"lattice": "diag(1, 1, 1)", "suite": "hard_lefschetz", "degrees": [2], "samples": 1})js");
  const auto out = std::filesystem::temp_directory_path() / "llv_test_report.json";
  CHECK(run_verify(ok.string()) == 0);
  CHECK(run_verify(ok.string() + " --format structured --out " + out.string()) == 0);
  const Report r = parse_report(slurp(out));
  CHECK(r.seed == 1);
  CHECK(run_verify(ok.string() + " --seed 9 --format structured --out " + out.string()) == 0);
  CHECK(parse_report(slurp(out)).seed == 9);
  CHECK(run_verify(bad_key.string()) == 2);
  CHECK(run_verify(failing.string()) == 1);
  CHECK(run_verify("") == 2);
  CHECK(run_verify(ok.string() + " --format xml") == 2);
  CHECK(run_verify(ok.string() + " --suite bogus") == 2);
  CHECK(run_verify("/nonexistent/file.json") == 2);
}
