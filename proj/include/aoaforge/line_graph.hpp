#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "aoaforge/graph.hpp"

namespace aoaforge {

/// Four nodes witnessing that a digraph is not a line graph: arcs (a,c),
/// (b,c), (b,d) present and (a,d) absent, with a≠b and c≠d (a=d is
/// possible; that case is exactly a transitive triangle). The bar (b,c)
/// is the arc rerouted through a dummy during elimination.
struct ZConfiguration {
  std::string a, b, c, d;
  auto operator<=>(const ZConfiguration&) const = default;
  Arc bar() const { return {b, c}; }
  std::string to_string() const;
};

/// Transitive triangle: arcs (a,b), (b,c), (a,c).
struct DeltaConfiguration {
  std::string a, b, c;
  auto operator<=>(const DeltaConfiguration&) const = default;
};

/// All of tails × heads are arcs of the host graph.
struct CompleteBipartite {
  std::vector<std::string> tails;  // sorted
  std::vector<std::string> heads;  // sorted
  bool operator==(const CompleteBipartite&) const = default;
};

struct BipartitePartition {
  std::vector<CompleteBipartite> parts;
};

/// Arc separator used in line-graph node names ("A→B").
inline constexpr std::string_view kArcJoin = "→";

std::string arc_node_name(const Arc& a);

/// L(g): one node per arc of g named "tail→head", and an arc u→v exactly
/// when u's head is v's tail. Node durations are 0.
AonDag line_graph(const AonDag& g);

/// First Z in lexicographic (a,b,c,d) order, or nothing if g is Z-free.
std::optional<ZConfiguration> first_z(const AonDag& g);

/// Every quadruple satisfying the Z invariants, sorted by (a,b,c,d).
std::vector<ZConfiguration> find_z_configurations(const AonDag& g);

/// Deduplicated bars of all Z configurations, sorted by (tail, head).
std::vector<Arc> z_bar_set(const AonDag& g);

/// All transitive triangles, sorted by (a,b,c).
std::vector<DeltaConfiguration> find_delta_configurations(const AonDag& g);

/// True iff g has no Z configuration.
bool is_line_graph(const AonDag& g);

/// Groups the arcs of a Z-free dag by the equivalence closure of "shares a
/// tail or shares a head"; every class is a complete bipartite. Parts are
/// ordered by the smallest topological level of their tail sets, then by
/// smallest tail code. Throws GraphError naming a witness Z when g is not
/// Z-free.
BipartitePartition partition_bipartites(const AonDag& g);

}  // namespace aoaforge
