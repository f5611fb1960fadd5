#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace llv {

/// One executed check. The anchor names the identity being checked, or "plumbing".
struct CheckRecord {
  std::string suite;
  std::string name;
  std::string inputs_digest;
  bool passed = false;
  std::string witness;
  std::string anchor;
  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct Report {
  std::string version;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> records;

  std::size_t passed_count() const;
  std::size_t failed_count() const { return records.size() - passed_count(); }
  bool all_passed() const { return failed_count() == 0; }
  friend bool operator==(const Report&, const Report&) = default;
};

enum class ReportFormat { Text, Structured };

/// Identifier of the structured schema; bumped on incompatible changes.
inline constexpr std::string_view kReportSchema = "llvlat-report/1";

/// 64-bit FNV-1a as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view data);

std::string emit_report(const Report& r, ReportFormat format);
/// Inverse of the structured format; ParseError on malformed or inconsistent input.
Report parse_report(std::string_view structured);

}  // namespace llv
