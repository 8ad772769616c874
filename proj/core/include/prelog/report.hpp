#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prelog/int_matrix.hpp"

namespace prelog {

enum class CheckStatus { pass, fail, info };

const char* status_name(CheckStatus s);
/// Throws ParseError on anything but "pass", "fail" or "info".
CheckStatus parse_status(const std::string& s);

/// One verified quantity. `expected` and `computed` are JSON text.
struct Check {
  std::string id;
  std::string description;
  std::string citation;
  std::string expected;
  std::string computed;
  CheckStatus status = CheckStatus::fail;
  int criterion = 0;

  friend bool operator==(const Check&, const Check&) = default;
};

struct GroupSummary {
  std::optional<std::size_t> prelog_rank;
  IntVector invariant_factors;  // torsion of coker delta
  std::optional<Integer> saturation_index;
  std::optional<std::size_t> generator_count;

  friend bool operator==(const GroupSummary&, const GroupSummary&) = default;
};

struct Report {
  std::string tool_version;
  std::string scenario_id;
  std::vector<Check> checks;
  GroupSummary summary;

  bool passed() const;
  std::size_t count(CheckStatus s) const;
  /// 0 when no check failed, 1 otherwise.
  int exit_code() const;

  /// Deterministic: checks in registry order, object keys sorted. Integers
  /// outside the 53-bit safe range are written as decimal strings.
  std::string to_json(int indent = 2) const;
  /// Throws ParseError.
  static Report from_json(const std::string& text);

  /// Fixed-width table, one line per check, then the summary.
  std::string table() const;

  friend bool operator==(const Report&, const Report&) = default;
};

std::string version();

}  // namespace prelog
