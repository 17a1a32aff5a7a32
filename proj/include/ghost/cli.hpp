#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ghost/json_io.hpp"
#include "ghost/newton.hpp"

namespace ghost::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kUsage = 2,
  kComputation = 3,
};

/// Slope list stored on disk: {"description", "slopes": [{"num","den"}...], "source"}.
struct Fixture {
  std::string description;
  std::vector<Rational> slopes;
  std::string source;
};

Fixture parse_fixture(const std::string& json_text);
Fixture load_fixture(const std::string& path);
std::string fixture_to_json(const Fixture& fixture);

struct SlopeDiff {
  std::size_t index = 0;  ///< 1-based
  Rational expected;
  Rational computed;
};

struct ComparisonReport {
  std::string source;
  SlopeList computed;
  std::size_t compared = 0;
  std::optional<std::size_t> first_mismatch;  ///< 1-based
  bool truncated = false;  ///< the two lists had different lengths; only the common prefix was compared
  std::vector<SlopeDiff> diffs;  ///< every compared index

  bool match() const { return !first_mismatch.has_value(); }
};

ComparisonReport compare(const Fixture& expected, const SlopeList& computed, const std::string& source = {});

Json slopes_to_json(const SlopeList& slopes);
SlopeList slopes_from_json(const Json& j);
Json report_to_json(const ComparisonReport& report);

/// Runs one subcommand (slopes, series, dims, boundary, halo, compare). args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ghost::cli
