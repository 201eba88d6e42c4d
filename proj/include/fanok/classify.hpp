#pragma once

#include <istream>
#include <string>
#include <vector>

#include "fanok/rational.hpp"
#include "fanok/stability.hpp"

namespace fanok {

/// One deformation family: id, second and third Betti numbers, and the
/// anticanonical degree (-K)^3.
struct FamilyRecord {
  std::string id;
  long b2 = 0;
  long b3 = 0;
  Rational degree;
};

/// Parses a CSV table with header `id,b2,b3,degree`; degree is an exact
/// "p/q" or integer literal. LF and CRLF both accepted. Malformed rows
/// raise a parse error with the line number; duplicate ids an input error.
std::vector<FamilyRecord> load_table(std::istream& source);

/// The normalized CSV form of a table (header, LF endings, exact degrees).
std::string serialize_table(const std::vector<FamilyRecord>& table);

/// Ids of all records whose (b2, b3, degree) triple matches exactly, in
/// table order.
std::vector<std::string> match_invariants(const std::vector<FamilyRecord>& table, long b2,
                                          long b3, const Rational& degree);

/// Renders the smooth-limit contradiction: a smooth degeneration preserves
/// (b2, b3, degree), so a smooth limit would land in a matched family; if
/// every matched family excludes Kahler-Ricci solitons, the limit must be
/// singular. Anything less is reported as inconclusive.
std::string smooth_limit_report(const std::vector<std::string>& matches,
                                const StabilityVerdict& verdict);

}  // namespace fanok
