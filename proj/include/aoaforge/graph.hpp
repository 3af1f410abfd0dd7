#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "aoaforge/bitmatrix.hpp"
#include "aoaforge/errors.hpp"

namespace aoaforge {

// Synthetic project start / end markers. "START" and "END" are accepted as
// ASCII aliases by the table parser and canonicalized to these.
inline constexpr std::string_view kAlpha = "α";  // α
inline constexpr std::string_view kOmega = "ω";  // ω

enum class NodeKind { Real, SourceMarker, SinkMarker, Dummy };

std::string_view node_kind_name(NodeKind kind);

struct AonNode {
  std::string code;
  NodeKind kind = NodeKind::Real;
  int duration = 0;
};

// Ordered pair of activity codes.
struct Arc {
  std::string tail;
  std::string head;
  auto operator<=>(const Arc&) const = default;
};

/// Activity-on-node precedence dag. Nodes are activities, arcs are direct
/// precedences. Immutable after construction; node indices are assigned in
/// lexicographic (byte) order of the codes, so index order and code order
/// coincide everywhere.
///
/// Construction accepts structurally broken graphs (cycles, self arcs,
/// duplicate arcs) so that validate_dag / validate_structure can report
/// them; only unknown or duplicate codes are rejected outright.
class AonDag {
 public:
  AonDag() = default;
  AonDag(std::vector<AonNode> nodes, std::vector<Arc> arcs);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int arc_count() const { return static_cast<int>(arcs_.size()); }

  bool has_node(std::string_view code) const;
  /// Throws GraphError if the code is unknown.
  const AonNode& node(std::string_view code) const;
  /// Nodes sorted by code.
  const std::vector<AonNode>& nodes() const { return nodes_; }
  /// Arcs sorted by (tail, head); duplicates preserved as given.
  std::vector<Arc> arcs() const;
  bool has_arc(std::string_view tail, std::string_view head) const;

  std::vector<std::string> successor_codes(std::string_view code) const;
  std::vector<std::string> predecessor_codes(std::string_view code) const;

  // Index-level access for algorithms. Indices are stable and sorted by code.
  int index_of(std::string_view code) const;  // -1 if unknown
  const AonNode& node_at(int index) const { return nodes_[index]; }
  const std::vector<int>& out(int index) const { return out_[index]; }
  const std::vector<int>& in(int index) const { return in_[index]; }
  const std::vector<std::pair<int, int>>& arc_indices() const { return arcs_; }

 private:
  std::vector<AonNode> nodes_;                // sorted by code
  std::vector<std::pair<int, int>> arcs_;     // sorted, duplicates kept
  std::vector<std::vector<int>> out_, in_;    // sorted adjacency
};

struct ValidationReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
  std::string to_string() const;
};

/// Full contract used by the table pipeline: acyclic, no self arcs, no
/// duplicate arcs, exactly one source marker (no predecessors) and one sink
/// marker (no successors), every other node wired between them.
ValidationReport validate_dag(const AonDag& g);

/// Structural subset (acyclic, no self arcs, no duplicate arcs) that the
/// conversion algorithms require; markers are optional here.
ValidationReport validate_structure(const AonDag& g);

/// Longest-path levels: sources sit at level 1 and level(v) = 1 + max level
/// over predecessors, so level(u) < level(v) for every arc (u, v).
/// Throws GraphError if the graph has a cycle.
std::map<std::string, int> topological_levels(const AonDag& g);

/// Levels regrouped as level -> sorted codes, for printing.
std::map<int, std::vector<std::string>> group_levels(
    const std::map<std::string, int>& levels);

/// Transitive closure of the direct-precedence relation: (u, v) is present
/// iff a directed path of length >= 1 leads from u to v.
class PrecedenceRelation {
 public:
  PrecedenceRelation() = default;
  PrecedenceRelation(std::vector<std::string> codes, BitMatrix reach);

  bool precedes(std::string_view u, std::string_view v) const;
  std::vector<Arc> pairs() const;  // sorted
  std::size_t size() const { return pair_count_; }

 private:
  std::vector<std::string> codes_;  // sorted
  BitMatrix reach_;
  std::size_t pair_count_ = 0;
};

PrecedenceRelation transitive_closure(const AonDag& g);

enum class Direction { In, Out };

/// Adjacency query; result sorted by code. Throws GraphError naming the
/// code if the node is unknown.
std::vector<std::string> neighbors(const AonDag& g, std::string_view code,
                                   Direction direction);

/// Deterministic topological order of node indices (smallest index first
/// among ready nodes). Throws GraphError if the graph has a cycle.
std::vector<int> topological_order(const AonDag& g);

/// Reachability over node indices: bit (u, v) set iff a path of length >= 1
/// runs from u to v. Requires an acyclic graph.
BitMatrix reachability(const AonDag& g);

}  // namespace aoaforge
