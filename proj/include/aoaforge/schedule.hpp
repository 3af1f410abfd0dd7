#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "aoaforge/graph.hpp"

namespace aoaforge {

struct ScheduleRow {
  std::string code;
  int duration = 0;
  std::vector<std::string> predecessors;
  bool operator==(const ScheduleRow&) const = default;
};

struct ScheduleTable {
  std::vector<ScheduleRow> rows;
  bool has_code(std::string_view code) const;
  bool operator==(const ScheduleTable&) const = default;
};

/// Parses CSV with header `code,duration,predecessors` (the duration column
/// may be omitted together with its header field). Predecessors are split
/// on ";"; "-" or an empty field means none. Lines starting with "#" are
/// comments. "START"/"END" are canonicalized to the α/ω marker codes.
///
/// Throws ParseError (citing the 1-based line) on: missing or malformed
/// header, wrong field count, empty code, duplicate code, malformed or
/// negative duration, self-precedence, duplicate predecessor on one row,
/// and predecessors that name no row (the markers may be referenced without
/// a row; augmentation supplies them).
ScheduleTable parse_schedule_table(std::string_view text);

enum class AugmentPolicy {
  Auto,    // insert missing α/ω markers and wire them up
  Strict,  // require explicit α and ω rows
};

/// Builds the activity-on-node dag: one node per row, one arc per
/// predecessor entry. Under Auto, a missing α is inserted before every
/// predecessor-free activity and a missing ω after every successor-free
/// one (plus α→ω when either end would be left bare). Under Strict a
/// missing marker row is a ValidationError.
///
/// The result is not validated here; run validate_dag on it.
AonDag build_aon(const ScheduleTable& t,
                 AugmentPolicy augment = AugmentPolicy::Auto);

/// Serializes with the canonical three-column header, rows in table order,
/// "-" for empty predecessor lists, LF line endings. parse(emit(t)) == t.
std::string emit_table(const ScheduleTable& t);

/// Rebuilds a table from a dag (rows in code order, predecessor lists from
/// in-arcs). Dummy nodes come out as plain zero-duration activities.
ScheduleTable table_from_aon(const AonDag& g);

}  // namespace aoaforge
