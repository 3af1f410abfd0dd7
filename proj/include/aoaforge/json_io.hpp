#pragma once

#include <string>

#include <json.hpp>

#include "aoaforge/aoa.hpp"
#include "aoaforge/cpm.hpp"

namespace aoaforge {

using ordered_json = nlohmann::ordered_json;

/// {"events": [{"id", "origin"}, ...], "arcs": [{"label", "tail", "head",
/// "kind", "duration"}, ...], "stats": {...}} with events sorted by id,
/// arcs by label, integers only.
ordered_json aoa_to_json(const AoaDag& aoa, const NetworkStats& stats);

/// {"early", "late", "total_float", "makespan", "critical"}; event ids are
/// stringified for the object keys.
ordered_json cpm_to_json(const CpmResult& r);

/// Two-space indentation plus trailing newline.
std::string dump_json(const ordered_json& j);

}  // namespace aoaforge
