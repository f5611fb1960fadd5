#include "llv/report.hpp"

#include "llv/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>

namespace llv {

using ojson = nlohmann::ordered_json;

std::size_t Report::passed_count() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& c) { return c.passed; }));
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

std::string emit_text(const Report& r) {
  std::string out = "llvlat verify " + r.version + "  seed " + std::to_string(r.seed) + "\n";
  for (const auto& c : r.records) {
    out += c.passed ? "[PASS] " : "[FAIL] ";
    out += c.suite + "/" + c.name + "  {" + c.anchor + "}  #" + c.inputs_digest;
    if (!c.witness.empty()) out += "  " + c.witness;
    out += '\n';
  }
  out += "summary: " + std::to_string(r.records.size()) + " checks, " + std::to_string(r.passed_count()) +
         " passed, " + std::to_string(r.failed_count()) + " failed\n";
  return out;
}

std::string emit_structured(const Report& r) {
  ojson records = ojson::array();
  for (const auto& c : r.records) {
    records.push_back({{"suite", c.suite},
                       {"name", c.name},
                       {"inputs_digest", c.inputs_digest},
                       {"passed", c.passed},
                       {"witness", c.witness},
                       {"anchor", c.anchor}});
  }
  ojson root = {{"schema", kReportSchema},
                {"version", r.version},
                {"seed", r.seed},
                {"summary", {{"total", r.records.size()}, {"passed", r.passed_count()}, {"failed", r.failed_count()}}},
                {"records", std::move(records)}};
  return root.dump(2) + "\n";
}

}  // namespace

std::string emit_report(const Report& r, ReportFormat format) {
  return format == ReportFormat::Text ? emit_text(r) : emit_structured(r);
}

Report parse_report(std::string_view structured) {
  try {
    const ojson root = ojson::parse(structured.begin(), structured.end());
    if (root.at("schema").get<std::string>() != kReportSchema) throw ParseError("report: unsupported schema");
    Report r;
    r.version = root.at("version").get<std::string>();
    r.seed = root.at("seed").get<std::uint64_t>();
    for (const auto& c : root.at("records")) {
      r.records.push_back({c.at("suite").get<std::string>(), c.at("name").get<std::string>(),
                           c.at("inputs_digest").get<std::string>(), c.at("passed").get<bool>(),
                           c.at("witness").get<std::string>(), c.at("anchor").get<std::string>()});
    }
    const auto& summary = root.at("summary");
    if (summary.at("total").get<std::size_t>() != r.records.size() ||
        summary.at("passed").get<std::size_t>() != r.passed_count() ||
        summary.at("failed").get<std::size_t>() != r.failed_count())
      throw ParseError("report: summary counts disagree with the records");
    return r;
  } catch (const ojson::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
}

}  // namespace llv
