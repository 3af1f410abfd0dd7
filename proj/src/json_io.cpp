#include "aoaforge/json_io.hpp"

namespace aoaforge {

ordered_json aoa_to_json(const AoaDag& aoa, const NetworkStats& stats) {
  ordered_json j;
  j["events"] = ordered_json::array();
  for (const AoaEvent& e : aoa.events) {
    j["events"].push_back({{"id", e.id}, {"origin", e.origin_string()}});
  }
  j["arcs"] = ordered_json::array();
  for (const AoaArc& a : aoa.arcs) {
    j["arcs"].push_back({{"label", a.label},
                         {"tail", a.tail},
                         {"head", a.head},
                         {"kind", a.kind == ArcKind::Real ? "real" : "dummy"},
                         {"duration", a.duration}});
  }
  j["stats"] = {{"event_count", stats.event_count},
                {"real_arc_count", stats.real_arc_count},
                {"dummy_arc_count", stats.dummy_arc_count},
                {"bipartite_count", stats.bipartite_count},
                {"z_bar_count", stats.z_bar_count},
                {"iterations", stats.iterations},
                {"fallback", stats.used_fallback}};
  return j;
}

ordered_json cpm_to_json(const CpmResult& r) {
  ordered_json j;
  j["early"] = ordered_json::object();
  for (const auto& [id, t] : r.early) j["early"][std::to_string(id)] = t;
  j["late"] = ordered_json::object();
  for (const auto& [id, t] : r.late) j["late"][std::to_string(id)] = t;
  j["total_float"] = ordered_json::object();
  for (const auto& [label, f] : r.total_float) j["total_float"][label] = f;
  j["makespan"] = r.makespan;
  j["critical"] = r.critical;
  return j;
}

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace aoaforge
