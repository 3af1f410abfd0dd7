#include "aoaforge/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace aoaforge {

std::string_view node_kind_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::Real: return "real";
    case NodeKind::SourceMarker: return "source";
    case NodeKind::SinkMarker: return "sink";
    case NodeKind::Dummy: return "dummy";
  }
  return "real";
}

AonDag::AonDag(std::vector<AonNode> nodes, std::vector<Arc> arcs)
    : nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end(),
            [](const AonNode& a, const AonNode& b) { return a.code < b.code; });
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    if (nodes_[i].code == nodes_[i - 1].code) {
      throw GraphError("duplicate node code '" + nodes_[i].code + "'");
    }
  }
  out_.resize(nodes_.size());
  in_.resize(nodes_.size());
  arcs_.reserve(arcs.size());
  for (const Arc& a : arcs) {
    int t = index_of(a.tail);
    int h = index_of(a.head);
    if (t < 0) throw GraphError("arc references unknown node '" + a.tail + "'");
    if (h < 0) throw GraphError("arc references unknown node '" + a.head + "'");
    arcs_.emplace_back(t, h);
  }
  std::sort(arcs_.begin(), arcs_.end());
  for (auto [t, h] : arcs_) {
    out_[t].push_back(h);
    in_[h].push_back(t);
  }
  for (auto& v : in_) std::sort(v.begin(), v.end());
}

bool AonDag::has_node(std::string_view code) const {
  return index_of(code) >= 0;
}

const AonNode& AonDag::node(std::string_view code) const {
  int i = index_of(code);
  if (i < 0) throw GraphError("unknown node '" + std::string(code) + "'");
  return nodes_[i];
}

std::vector<Arc> AonDag::arcs() const {
  std::vector<Arc> out;
  out.reserve(arcs_.size());
  for (auto [t, h] : arcs_) {
    out.push_back({nodes_[t].code, nodes_[h].code});
  }
  return out;
}

bool AonDag::has_arc(std::string_view tail, std::string_view head) const {
  int t = index_of(tail);
  int h = index_of(head);
  if (t < 0 || h < 0) return false;
  return std::binary_search(out_[t].begin(), out_[t].end(), h);
}

std::vector<std::string> AonDag::successor_codes(std::string_view code) const {
  return neighbors(*this, code, Direction::Out);
}

std::vector<std::string> AonDag::predecessor_codes(std::string_view code) const {
  return neighbors(*this, code, Direction::In);
}

int AonDag::index_of(std::string_view code) const {
  auto it = std::lower_bound(
      nodes_.begin(), nodes_.end(), code,
      [](const AonNode& n, std::string_view c) { return n.code < c; });
  if (it == nodes_.end() || it->code != code) return -1;
  return static_cast<int>(it - nodes_.begin());
}

std::string ValidationReport::to_string() const {
  if (problems.empty()) return "ok";
  std::ostringstream os;
  for (std::size_t i = 0; i < problems.size(); ++i) {
    if (i) os << '\n';
    os << problems[i];
  }
  return os.str();
}

namespace {

// Appends self-arc, duplicate-arc and cycle findings shared by both
// validation levels. Returns true if the graph is acyclic.
bool check_structure(const AonDag& g, std::vector<std::string>& problems) {
  const auto& arcs = g.arc_indices();
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    auto [t, h] = arcs[i];
    if (t == h) {
      problems.push_back("self arc on '" + g.node_at(t).code + "'");
    }
    if (i > 0 && arcs[i] == arcs[i - 1]) {
      problems.push_back("duplicate arc (" + g.node_at(t).code + ", " +
                         g.node_at(h).code + ")");
    }
  }

  // Kahn's algorithm; leftover nodes sit on or behind a cycle. Walk one
  // cycle explicitly so the report names it.
  int n = g.node_count();
  std::vector<int> indeg(n, 0);
  for (auto [t, h] : arcs) {
    if (t != h) ++indeg[h];
  }
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push(v);
  }
  int done = 0;
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    ++done;
    for (int w : g.out(v)) {
      if (w != v && --indeg[w] == 0) ready.push(w);
    }
  }
  if (done == n) return true;

  int start = -1;
  for (int v = 0; v < n; ++v) {
    if (indeg[v] > 0) {
      start = v;
      break;
    }
  }
  // Every remaining node has an unresolved predecessor; walking those
  // backwards must loop.
  std::vector<int> prev(n, -1);
  std::vector<char> seen(n, 0);
  int v = start;
  while (!seen[v]) {
    seen[v] = 1;
    int back = -1;
    for (int u : g.in(v)) {
      if (u != v && indeg[u] > 0) {
        back = u;
        break;
      }
    }
    prev[v] = back;
    v = back;
  }
  std::vector<std::string> cycle;
  int w = v;
  do {
    cycle.push_back(g.node_at(w).code);
    w = prev[w];
  } while (w != v);
  std::reverse(cycle.begin(), cycle.end());
  std::string msg = "cycle (";
  for (const auto& c : cycle) msg += c + ", ";
  msg += cycle.front() + ")";
  problems.push_back(msg);
  return false;
}

}  // namespace

ValidationReport validate_dag(const AonDag& g) {
  ValidationReport report;
  check_structure(g, report.problems);

  int sources = 0, sinks = 0;
  for (const AonNode& node : g.nodes()) {
    int idx = g.index_of(node.code);
    bool no_pred = g.in(idx).empty();
    bool no_succ = g.out(idx).empty();
    switch (node.kind) {
      case NodeKind::SourceMarker:
        ++sources;
        if (!no_pred) {
          report.problems.push_back("source marker '" + node.code +
                                    "' has predecessors");
        }
        if (node.duration != 0) {
          report.problems.push_back("source marker '" + node.code +
                                    "' has nonzero duration");
        }
        break;
      case NodeKind::SinkMarker:
        ++sinks;
        if (!no_succ) {
          report.problems.push_back("sink marker '" + node.code +
                                    "' has successors");
        }
        if (node.duration != 0) {
          report.problems.push_back("sink marker '" + node.code +
                                    "' has nonzero duration");
        }
        break;
      default:
        if (no_pred) {
          report.problems.push_back("node '" + node.code +
                                    "' has no predecessors");
        }
        if (no_succ) {
          report.problems.push_back("node '" + node.code +
                                    "' has no successors");
        }
        if (node.duration < 0) {
          report.problems.push_back("node '" + node.code +
                                    "' has negative duration");
        }
        break;
    }
  }
  if (sources != 1) {
    report.problems.push_back("expected exactly one source marker, found " +
                              std::to_string(sources));
  }
  if (sinks != 1) {
    report.problems.push_back("expected exactly one sink marker, found " +
                              std::to_string(sinks));
  }
  return report;
}

ValidationReport validate_structure(const AonDag& g) {
  ValidationReport report;
  check_structure(g, report.problems);
  for (const AonNode& node : g.nodes()) {
    if (node.duration < 0) {
      report.problems.push_back("node '" + node.code +
                                "' has negative duration");
    }
  }
  return report;
}

std::vector<int> topological_order(const AonDag& g) {
  int n = g.node_count();
  std::vector<int> indeg(n, 0);
  for (auto [t, h] : g.arc_indices()) ++indeg[h];
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push(v);
  }
  std::vector<int> order;
  order.reserve(n);
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int w : g.out(v)) {
      if (--indeg[w] == 0) ready.push(w);
    }
  }
  if (static_cast<int>(order.size()) != n) {
    throw GraphError("graph has a cycle");
  }
  return order;
}

std::map<std::string, int> topological_levels(const AonDag& g) {
  std::vector<int> order = topological_order(g);
  std::vector<int> level(g.node_count(), 1);
  for (int v : order) {
    for (int u : g.in(v)) {
      level[v] = std::max(level[v], level[u] + 1);
    }
  }
  std::map<std::string, int> out;
  for (int v = 0; v < g.node_count(); ++v) {
    out[g.node_at(v).code] = level[v];
  }
  return out;
}

std::map<int, std::vector<std::string>> group_levels(
    const std::map<std::string, int>& levels) {
  std::map<int, std::vector<std::string>> out;
  for (const auto& [code, level] : levels) out[level].push_back(code);
  for (auto& [level, codes] : out) std::sort(codes.begin(), codes.end());
  return out;
}

BitMatrix reachability(const AonDag& g) {
  std::vector<int> order = topological_order(g);
  int n = g.node_count();
  BitMatrix reach(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    for (int w : g.out(v)) {
      reach.set(v, w);
      reach.or_row(v, w);
    }
  }
  return reach;
}

PrecedenceRelation::PrecedenceRelation(std::vector<std::string> codes,
                                       BitMatrix reach)
    : codes_(std::move(codes)), reach_(std::move(reach)) {
  for (std::size_t i = 0; i < codes_.size(); ++i) {
    pair_count_ += reach_.count_row(i);
  }
}

bool PrecedenceRelation::precedes(std::string_view u, std::string_view v) const {
  auto find = [&](std::string_view c) -> int {
    auto it = std::lower_bound(codes_.begin(), codes_.end(), c);
    if (it == codes_.end() || *it != c) return -1;
    return static_cast<int>(it - codes_.begin());
  };
  int i = find(u), j = find(v);
  if (i < 0 || j < 0) return false;
  return reach_.get(i, j);
}

std::vector<Arc> PrecedenceRelation::pairs() const {
  std::vector<Arc> out;
  out.reserve(pair_count_);
  for (std::size_t i = 0; i < codes_.size(); ++i) {
    for (std::size_t j = 0; j < codes_.size(); ++j) {
      if (reach_.get(i, j)) out.push_back({codes_[i], codes_[j]});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PrecedenceRelation transitive_closure(const AonDag& g) {
  std::vector<std::string> codes;
  codes.reserve(g.node_count());
  for (const AonNode& n : g.nodes()) codes.push_back(n.code);
  return PrecedenceRelation(std::move(codes), reachability(g));
}

std::vector<std::string> neighbors(const AonDag& g, std::string_view code,
                                   Direction direction) {
  int i = g.index_of(code);
  if (i < 0) throw GraphError("unknown node '" + std::string(code) + "'");
  const std::vector<int>& adj =
      direction == Direction::Out ? g.out(i) : g.in(i);
  std::vector<std::string> out;
  out.reserve(adj.size());
  for (int v : adj) out.push_back(g.node_at(v).code);
  return out;  // adjacency is index-sorted, hence code-sorted
}

}  // namespace aoaforge
