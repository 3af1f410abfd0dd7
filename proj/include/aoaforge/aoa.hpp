#pragma once

#include <string>
#include <vector>

#include "aoaforge/graph.hpp"
#include "aoaforge/line_graph.hpp"
#include "aoaforge/schedule.hpp"

namespace aoaforge {

enum class GroupingKind { TailGroup, HeadGroup, Singleton, CanonicalFallback };

std::string_view grouping_kind_name(GroupingKind kind);

/// One inserted dummy activity and the bars it replaced.
struct DummyRecord {
  std::string id;
  std::vector<Arc> replaced_bars;  // sorted
  GroupingKind grouping = GroupingKind::Singleton;
  bool operator==(const DummyRecord&) const = default;
};

struct EliminationResult {
  AonDag graph;  // Z-free
  std::vector<DummyRecord> dummies;
  int iterations = 0;
  bool used_fallback = false;
};

/// Rewrites g into a Z-free dag by rerouting the bar arcs of its Z
/// configurations through fresh zero-duration dummy nodes. Per sweep the
/// current bar set is grouped: bars sharing a head whose tails have
/// identical successor sets collapse into one dummy, then bars sharing a
/// tail whose heads have identical predecessor sets, then singletons;
/// groups are materialized in ascending (head, tail) order of each group's
/// smallest bar. Sweeps repeat until no Z remains. If the sweep count
/// reaches the node count, or the dummies would outnumber the precedence
/// pairs of g, the construction restarts from g and splits every arc
/// through its own dummy, which is Z-free in one pass.
///
/// The precedence closure restricted to g's nodes is preserved exactly.
/// Throws ValidationError when g is not a well-formed dag.
///
/// sweep_cap overrides the sweep budget (tests use 0 to force the
/// fallback); anything negative means "node count".
EliminationResult eliminate_z(const AonDag& g, int sweep_cap = -1);

enum class EventOrigin { Source, Sink, Bipartite };

struct AoaEvent {
  int id = 0;
  EventOrigin origin = EventOrigin::Bipartite;
  int part = 0;  // 1-based partition index when origin == Bipartite
  std::string origin_string() const;
};

enum class ArcKind { Real, Dummy };

struct AoaArc {
  std::string label;
  int tail = 0;
  int head = 0;
  ArcKind kind = ArcKind::Real;
  int duration = 0;
};

/// Activity-on-arc network: events are nodes, activities are labeled arcs.
struct AoaDag {
  std::vector<AoaEvent> events;  // sorted by id, 1..size()
  std::vector<AoaArc> arcs;      // sorted by label
  int source_id = 0;
  int sink_id = 0;
  const AoaArc* find_arc(std::string_view label) const;
};

/// Turns a Z-free dag plus its bipartite partition into the event network:
/// one event per part bracketed by a global source and sink, and one arc
/// per node v running from the event whose part has v among its heads
/// (source when v has no predecessors) to the event whose part has v among
/// its tails (sink when v has no successors). Event ids are assigned in
/// topological order, source first. Throws InternalError if the partition
/// does not match g.
AoaDag build_aoa(const AonDag& g, const BipartitePartition& p);

struct EquivalenceReport {
  bool ok = false;
  std::vector<Arc> missing;   // precedences lost by the network
  std::vector<Arc> spurious;  // precedences invented by the network
  std::string to_string() const;
};

/// Checks that the network represents exactly the precedence closure of
/// aon: u precedes v iff u's head event reaches v's tail event (equality
/// counts as the empty path). Dummy arcs carry paths but are not compared.
/// Throws GraphError when a non-dummy activity of aon has no arc in aoa.
EquivalenceReport verify_equivalence(const AonDag& aon, const AoaDag& aoa);

/// True iff the line graph of aoa, with nodes named by arc labels, equals
/// g node-for-node and arc-for-arc.
bool line_graph_roundtrip_check(const AonDag& g, const AoaDag& aoa);

struct NetworkStats {
  int event_count = 0;
  int real_arc_count = 0;
  int dummy_arc_count = 0;
  int bipartite_count = 0;
  int z_bar_count = 0;  // bars of the input graph before any rewriting
  int iterations = 0;
  bool used_fallback = false;
  bool operator==(const NetworkStats&) const = default;
};

struct ConversionResult {
  AonDag aon;        // augmented input graph
  AonDag eliminated; // Z-free rewrite
  std::vector<DummyRecord> dummies;
  BipartitePartition partition;
  AoaDag aoa;
  NetworkStats stats;
};

/// End-to-end pipeline: build_aon, validate_dag, eliminate_z,
/// partition_bipartites, build_aoa. The equivalence check and the line
/// graph round trip run on every conversion; their failure is an
/// InternalError, never a silently wrong network. Validation failures are
/// ValidationErrors carrying the full report.
ConversionResult convert(const ScheduleTable& t,
                         AugmentPolicy augment = AugmentPolicy::Auto);

/// Same pipeline for an already-built dag (markers optional; structure is
/// still validated).
ConversionResult convert_graph(const AonDag& g);

}  // namespace aoaforge
