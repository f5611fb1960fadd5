#pragma once

// Scenario files: a JSON object naming the lattice, the suites to run, the
// seed, and optional explicit inputs. Rationals are integers or "p/q" strings;
// matrices are row-major arrays of rows. Unknown keys are rejected.

#include "llv/hodge.hpp"
#include "llv/lattice.hpp"
#include "llv/sp.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace llv {

struct PeriodPointInput {
  PeriodPoint sigma;
  std::optional<QVector> omega;
};

struct Scenario {
  /// Expression or "gram:<matrix>"; feeds the input digests.
  std::string lattice_source = "kummer(2)";
  BBFLattice lattice = kummer_lattice(2);
  /// Empty means every suite.
  std::vector<std::string> suites;
  std::uint64_t seed = 0;
  unsigned bound = 20;
  std::vector<unsigned> degrees{2, 3};
  bool allow_large_n = false;
  /// Overrides the per-suite sample counts when set.
  std::optional<unsigned> samples;
  std::vector<PeriodPointInput> period_points;
  std::vector<QMatrix> isometries;
  std::vector<ChernData> chern_data;
  std::vector<SpParams> sp_params;
};

/// Suite names in canonical execution order.
const std::vector<std::string>& known_suites();

/// Largest Sym degree accepted without / with allow_large_n.
inline constexpr unsigned kDefaultMaxDegree = 3;
inline constexpr unsigned kLargeMaxDegree = 5;

/// Throws ParseError naming the line and column, or the offending field.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::filesystem::path& path);

/// Re-checks cross-field constraints after command-line overrides.
void validate(const Scenario& s);

}  // namespace llv
