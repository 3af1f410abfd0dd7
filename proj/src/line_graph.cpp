#include "aoaforge/line_graph.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <set>

namespace aoaforge {

std::string ZConfiguration::to_string() const {
  return "Z(a=" + a + ", b=" + b + ", c=" + c + ", d=" + d + ")";
}

std::string arc_node_name(const Arc& a) {
  return a.tail + std::string(kArcJoin) + a.head;
}

AonDag line_graph(const AonDag& g) {
  std::vector<AonNode> nodes;
  for (const Arc& a : g.arcs()) {
    nodes.push_back({arc_node_name(a), NodeKind::Real, 0});
  }
  std::vector<Arc> arcs;
  for (int w = 0; w < g.node_count(); ++w) {
    const std::string& code = g.node_at(w).code;
    for (int x : g.in(w)) {
      std::string u = arc_node_name({g.node_at(x).code, code});
      for (int y : g.out(w)) {
        arcs.push_back({u, arc_node_name({code, g.node_at(y).code})});
      }
    }
  }
  return AonDag(std::move(nodes), std::move(arcs));
}

namespace {

// Calls fn(a, b) for every ordered pair of distinct nodes with at least one
// common successor and succ(b) ⊄ succ(a); these are exactly the pairs whose
// Zs have bars (b, c) over the common successors c. Candidate pairs are
// found through shared heads, so sparse graphs stay cheap. Stops early when
// fn returns true.
template <typename Fn>
void for_each_z_pair(const AonDag& g, Fn fn) {
  int n = g.node_count();
  BitMatrix succ(n);
  for (int v = 0; v < n; ++v) {
    for (int w : g.out(v)) succ.set(v, w);
  }
  std::set<std::pair<int, int>> seen;
  for (int c = 0; c < n; ++c) {
    const std::vector<int>& preds = g.in(c);
    for (std::size_t i = 0; i < preds.size(); ++i) {
      for (std::size_t j = 0; j < preds.size(); ++j) {
        if (i == j) continue;
        int a = preds[i], b = preds[j];
        if (!seen.insert({a, b}).second) continue;
        if (succ.row_minus_nonempty(b, a)) {
          if (fn(a, b)) return;
        }
      }
    }
  }
}

}  // namespace

std::optional<ZConfiguration> first_z(const AonDag& g) {
  std::optional<ZConfiguration> best;
  for_each_z_pair(g, [&](int a, int b) {
    std::vector<int> common, extra;
    std::set<int> succ_a(g.out(a).begin(), g.out(a).end());
    for (int w : g.out(b)) {
      (succ_a.count(w) ? common : extra).push_back(w);
    }
    ZConfiguration z{g.node_at(a).code, g.node_at(b).code,
                     g.node_at(common.front()).code,
                     g.node_at(extra.front()).code};
    if (!best || z < *best) best = z;
    return false;
  });
  return best;
}

std::vector<ZConfiguration> find_z_configurations(const AonDag& g) {
  std::vector<ZConfiguration> out;
  for_each_z_pair(g, [&](int a, int b) {
    std::vector<int> common, extra;
    std::set<int> succ_a(g.out(a).begin(), g.out(a).end());
    for (int w : g.out(b)) {
      (succ_a.count(w) ? common : extra).push_back(w);
    }
    for (int c : common) {
      for (int d : extra) {
        out.push_back({g.node_at(a).code, g.node_at(b).code,
                       g.node_at(c).code, g.node_at(d).code});
      }
    }
    return false;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Arc> z_bar_set(const AonDag& g) {
  std::set<Arc> bars;
  for_each_z_pair(g, [&](int a, int b) {
    std::set<int> succ_a(g.out(a).begin(), g.out(a).end());
    for (int w : g.out(b)) {
      if (succ_a.count(w)) {
        bars.insert({g.node_at(b).code, g.node_at(w).code});
      }
    }
    return false;
  });
  return {bars.begin(), bars.end()};
}

std::vector<DeltaConfiguration> find_delta_configurations(const AonDag& g) {
  std::vector<DeltaConfiguration> out;
  for (auto [a, b] : g.arc_indices()) {
    for (int c : g.out(b)) {
      if (std::binary_search(g.out(a).begin(), g.out(a).end(), c)) {
        out.push_back({g.node_at(a).code, g.node_at(b).code,
                       g.node_at(c).code});
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_line_graph(const AonDag& g) {
  bool found = false;
  for_each_z_pair(g, [&](int, int) {
    found = true;
    return true;
  });
  return !found;
}

BipartitePartition partition_bipartites(const AonDag& g) {
  if (auto z = first_z(g)) {
    throw GraphError("not a line graph: witness " + z->to_string());
  }

  const auto& arcs = g.arc_indices();
  int m = static_cast<int>(arcs.size());
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };

  // Arcs sharing a tail or a head land in one class.
  std::map<int, int> by_tail, by_head;
  for (int i = 0; i < m; ++i) {
    auto [t, h] = arcs[i];
    if (auto it = by_tail.find(t); it != by_tail.end()) {
      unite(i, it->second);
    } else {
      by_tail[t] = i;
    }
    if (auto it = by_head.find(h); it != by_head.end()) {
      unite(i, it->second);
    } else {
      by_head[h] = i;
    }
  }

  std::map<int, std::pair<std::set<int>, std::set<int>>> classes;
  for (int i = 0; i < m; ++i) {
    auto& [tails, heads] = classes[find(i)];
    tails.insert(arcs[i].first);
    heads.insert(arcs[i].second);
  }

  std::map<std::string, int> levels = topological_levels(g);
  struct Keyed {
    int level;
    std::string code;
    CompleteBipartite part;
  };
  std::vector<Keyed> keyed;
  for (auto& [root, sets] : classes) {
    auto& [tails, heads] = sets;
    CompleteBipartite part;
    int min_level = INT_MAX;
    for (int t : tails) {  // set iteration is index order, hence code order
      const std::string& code = g.node_at(t).code;
      part.tails.push_back(code);
      min_level = std::min(min_level, levels.at(code));
    }
    for (int h : heads) {
      part.heads.push_back(g.node_at(h).code);
    }
    for (const std::string& t : part.tails) {
      for (const std::string& h : part.heads) {
        if (!g.has_arc(t, h)) {
          throw InternalError("bipartite class not complete: missing (" + t +
                              ", " + h + ")");
        }
      }
    }
    keyed.push_back({min_level, part.tails.front(), std::move(part)});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    return std::tie(a.level, a.code) < std::tie(b.level, b.code);
  });

  BipartitePartition partition;
  for (Keyed& k : keyed) partition.parts.push_back(std::move(k.part));
  return partition;
}

}  // namespace aoaforge
