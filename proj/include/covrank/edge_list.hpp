#pragma once

#include <cstdint>
#include <iosfwd>

#include "covrank/bigraph.hpp"

namespace covrank {

struct ParseOptions {
  // Read lines as `<item> <contributor>` instead of `<contributor> <item>`.
  // Public datasets ship in both orientations.
  bool swap_columns = false;
};

struct LoadReport {
  std::int64_t lines_read = 0;
  std::int64_t comments_skipped = 0;
  std::int64_t blanks_skipped = 0;
  std::int64_t duplicates_dropped = 0;
};

// Parses a whitespace-separated edge list: one `<contributor> <item>` pair per
// line, `%` or `#` comment lines tolerated, fields beyond the first two
// ignored. Dense ids are assigned in first-appearance order per side and
// duplicate edges are collapsed (counted in the report).
// Throws ParseError on a line with fewer than two fields and DataError on an
// empty edge set.
BipartiteGraph load_edge_list(std::istream& in, const ParseOptions& options = {},
                              LoadReport* report = nullptr);

// Canonical serialization: one `contributor<TAB>item` line per edge,
// contributors by ascending id, items ascending within each contributor.
void write_canonical_edge_list(const BipartiteGraph& g, std::ostream& out);

}  // namespace covrank
