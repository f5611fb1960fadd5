// verify: runs property suites from a scenario file and writes a report.
// Exit status: 0 all checks pass, 1 some check failed, 2 usage, parse or infrastructure error.

#include "llv/errors.hpp"
#include "llv/report.hpp"
#include "llv/scenario.hpp"
#include "llv/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic verification suites for LLV lattices and Lefschetz operators", "verify"};
  app.set_version_flag("--version", std::string(LLV_VERSION));

  std::string scenario_path;
  std::vector<std::string> suites;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> bound;
  std::string format = "text";
  std::string out_path;

  app.add_option("scenario", scenario_path, "Scenario file (JSON)")->required();
  app.add_option("--suite", suites, "Suite to run; repeatable. Overrides the scenario selection");
  app.add_option("--seed", seed, "Seed override (64-bit)");
  app.add_option("--bound", bound, "Bound on random numerators and denominators")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--out", out_path, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  llv::Report report;
  try {
    llv::Scenario scenario = llv::load_scenario(scenario_path);
    if (!suites.empty()) scenario.suites = suites;
    if (seed) scenario.seed = *seed;
    if (bound) scenario.bound = *bound;
    llv::validate(scenario);
    report = llv::run_suites(scenario);
  } catch (const llv::ParseError& e) {
    std::cerr << "verify: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "verify: infrastructure error: " << e.what() << '\n';
    return kExitUsage;
  }

  const std::string bytes =
      llv::emit_report(report, format == "structured" ? llv::ReportFormat::Structured : llv::ReportFormat::Text);
  if (out_path.empty()) {
    std::cout << bytes;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << bytes)) {
      std::cerr << "verify: cannot write '" << out_path << "'\n";
      return kExitUsage;
    }
  }
  return report.all_passed() ? kExitPass : kExitCheckFailure;
}
