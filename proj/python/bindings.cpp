#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aoaforge/aoa.hpp"
#include "aoaforge/cpm.hpp"
#include "aoaforge/dot.hpp"
#include "aoaforge/gen.hpp"
#include "aoaforge/graph.hpp"
#include "aoaforge/json_io.hpp"
#include "aoaforge/line_graph.hpp"
#include "aoaforge/schedule.hpp"

namespace py = pybind11;
using namespace aoaforge;

namespace {

std::vector<std::pair<std::string, std::string>> arc_pairs(
    const std::vector<Arc>& arcs) {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(arcs.size());
  for (const Arc& a : arcs) out.push_back({a.tail, a.head});
  return out;
}

ConversionResult convert_text(const std::string& text, bool strict) {
  ScheduleTable t = parse_schedule_table(text);
  return convert(t, strict ? AugmentPolicy::Strict : AugmentPolicy::Auto);
}

}  // namespace

PYBIND11_MODULE(_aoaforge, m) {
  m.doc() = "activity-on-node to activity-on-arc network conversion";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InternalError& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<ScheduleRow>(m, "ScheduleRow")
      .def_readonly("code", &ScheduleRow::code)
      .def_readonly("duration", &ScheduleRow::duration)
      .def_readonly("predecessors", &ScheduleRow::predecessors)
      .def("__repr__", [](const ScheduleRow& r) {
        return "ScheduleRow(code=" + r.code + ")";
      });

  py::class_<ScheduleTable>(m, "ScheduleTable")
      .def_readonly("rows", &ScheduleTable::rows)
      .def("__len__", [](const ScheduleTable& t) { return t.rows.size(); })
      .def("to_csv", [](const ScheduleTable& t) { return emit_table(t); });

  py::class_<NetworkStats>(m, "NetworkStats")
      .def_readonly("event_count", &NetworkStats::event_count)
      .def_readonly("real_arc_count", &NetworkStats::real_arc_count)
      .def_readonly("dummy_arc_count", &NetworkStats::dummy_arc_count)
      .def_readonly("bipartite_count", &NetworkStats::bipartite_count)
      .def_readonly("z_bar_count", &NetworkStats::z_bar_count)
      .def_readonly("iterations", &NetworkStats::iterations)
      .def_readonly("used_fallback", &NetworkStats::used_fallback);

  py::class_<AoaEvent>(m, "Event")
      .def_readonly("id", &AoaEvent::id)
      .def_property_readonly("origin", &AoaEvent::origin_string);

  py::class_<AoaArc>(m, "Activity")
      .def_readonly("label", &AoaArc::label)
      .def_readonly("tail", &AoaArc::tail)
      .def_readonly("head", &AoaArc::head)
      .def_readonly("duration", &AoaArc::duration)
      .def_property_readonly("is_dummy", [](const AoaArc& a) {
        return a.kind == ArcKind::Dummy;
      });

  py::class_<AoaDag>(m, "Network")
      .def_readonly("events", &AoaDag::events)
      .def_readonly("arcs", &AoaDag::arcs)
      .def_readonly("source_id", &AoaDag::source_id)
      .def_readonly("sink_id", &AoaDag::sink_id)
      .def("to_dot", [](const AoaDag& aoa) { return render_dot(aoa); });

  py::class_<DummyRecord>(m, "Dummy")
      .def_readonly("id", &DummyRecord::id)
      .def_property_readonly("replaced",
                             [](const DummyRecord& d) {
                               return arc_pairs(d.replaced_bars);
                             })
      .def_property_readonly("grouping", [](const DummyRecord& d) {
        return std::string(grouping_kind_name(d.grouping));
      });

  py::class_<ConversionResult>(m, "Conversion")
      .def_readonly("network", &ConversionResult::aoa)
      .def_readonly("dummies", &ConversionResult::dummies)
      .def_readonly("stats", &ConversionResult::stats)
      .def("to_json", [](const ConversionResult& r) {
        return dump_json(aoa_to_json(r.aoa, r.stats));
      });

  py::class_<CpmResult>(m, "Schedule")
      .def_readonly("early", &CpmResult::early)
      .def_readonly("late", &CpmResult::late)
      .def_readonly("total_float", &CpmResult::total_float)
      .def_readonly("makespan", &CpmResult::makespan)
      .def_readonly("critical", &CpmResult::critical);

  m.def("parse_table", &parse_schedule_table, py::arg("text"),
        "parse a code,duration,predecessors CSV table");
  m.def("generate_table", &generate_random_table, py::arg("nodes"),
        py::arg("density"), py::arg("seed"),
        "generate a random layered schedule table");
  m.def("convert", &convert_text, py::arg("text"), py::arg("strict") = false,
        "convert a CSV table into an event network");
  m.def(
      "schedule",
      [](const ConversionResult& r) { return aoaforge::schedule(r.aoa); },
      py::arg("conversion"), "run the critical-path pass over a conversion");
  m.def(
      "levels",
      [](const std::string& text) {
        AonDag g = build_aon(parse_schedule_table(text));
        return group_levels(topological_levels(g));
      },
      py::arg("text"), "topological levels of the activity graph");
}
