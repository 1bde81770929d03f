#pragma once

#include <string>
#include <vector>

#include "tribound/bigint.hpp"

namespace tribound {

// One recomputed quantity compared against its recorded reference value.
// A nonempty note marks a documented discrepancy: those never fail the
// check, they are reported and move on.
struct CheckEntry {
  std::string id;
  std::string expected;
  std::string computed;
  bool match = false;
  std::string note;
};

struct CheckLedger {
  std::vector<CheckEntry> entries;

  // true when every mismatching entry carries a note
  bool clean() const;
  long mismatches() const;
  long annotated_mismatches() const;
};

// Recomputes the full reference set (covering-type values, face tables,
// totals, closed-form facet comparisons) and compares entry by entry.
CheckLedger check_against_embedded();

// Rounds a positive integer to `digits` significant figures and renders it
// as d.dd...e<exp>.  Exposed for the report output.
std::string to_sig_figs(const BigInt& value, int digits);

}  // namespace tribound
