#pragma once

// Slow, independent reimplementations used to cross-check the library.
// Everything here is written against the definitions, not the library's
// algorithms: reachability is per-node DFS, Z/Δ detection on small graphs
// is the literal quadruple/triple scan, bigger graphs get a bitset scan
// over node pairs, and the longest path enumerates whole paths.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "aoaforge/aoa.hpp"
#include "aoaforge/graph.hpp"
#include "aoaforge/line_graph.hpp"

namespace oracles {

using aoaforge::AoaArc;
using aoaforge::AoaDag;
using aoaforge::AonDag;
using aoaforge::Arc;
using aoaforge::BipartitePartition;

using PairSet = std::set<std::pair<std::string, std::string>>;

// Transitive closure by a fresh DFS from every node.
inline PairSet reach_pairs(const AonDag& g) {
  PairSet out;
  int n = g.node_count();
  for (int s = 0; s < n; ++s) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack(g.out(s).begin(), g.out(s).end());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (seen[v]) continue;
      seen[v] = 1;
      out.insert({g.node_at(s).code, g.node_at(v).code});
      for (int w : g.out(v)) stack.push_back(w);
    }
  }
  return out;
}

// Literal scan over all (a,b,c,d) quadruples; fine for small graphs.
inline std::vector<aoaforge::ZConfiguration> z_quadruples(const AonDag& g) {
  std::vector<aoaforge::ZConfiguration> out;
  int n = g.node_count();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      for (int c = 0; c < n; ++c) {
        for (int d = 0; d < n; ++d) {
          if (c == d) continue;
          const std::string& ca = g.node_at(a).code;
          const std::string& cb = g.node_at(b).code;
          const std::string& cc = g.node_at(c).code;
          const std::string& cd = g.node_at(d).code;
          if (g.has_arc(ca, cc) && g.has_arc(cb, cc) && g.has_arc(cb, cd) &&
              !g.has_arc(ca, cd)) {
            out.push_back({ca, cb, cc, cd});
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::set<Arc> z_bars(const AonDag& g) {
  std::set<Arc> bars;
  for (const auto& z : z_quadruples(g)) bars.insert(z.bar());
  return bars;
}

// Literal triple scan for transitive triangles.
inline std::vector<aoaforge::DeltaConfiguration> deltas(const AonDag& g) {
  std::vector<aoaforge::DeltaConfiguration> out;
  int n = g.node_count();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        const std::string& ca = g.node_at(a).code;
        const std::string& cb = g.node_at(b).code;
        const std::string& cc = g.node_at(c).code;
        if (g.has_arc(ca, cb) && g.has_arc(cb, cc) && g.has_arc(ca, cc)) {
          out.push_back({ca, cb, cc});
        }
      }
    }
  }
  return out;
}

// Word-packed successor rows, for the pair scans below.
inline std::vector<std::vector<std::uint64_t>> succ_rows(const AonDag& g) {
  int n = g.node_count();
  std::size_t words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(n,
                                               std::vector<std::uint64_t>(words, 0));
  for (auto [t, h] : g.arc_indices()) {
    rows[t][h / 64] |= std::uint64_t{1} << (h % 64);
  }
  return rows;
}

// Z-freeness on graphs of any size: a Z exists iff some ordered pair (a,b)
// shares a successor while succ(b) has a member succ(a) lacks.
inline bool is_z_free(const AonDag& g) {
  auto rows = succ_rows(g);
  int n = g.node_count();
  std::size_t words = rows.empty() ? 0 : rows[0].size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      bool common = false, extra = false;
      for (std::size_t w = 0; w < words && !(common && extra); ++w) {
        if (rows[a][w] & rows[b][w]) common = true;
        if (rows[b][w] & ~rows[a][w]) extra = true;
      }
      if (common && extra) return false;
    }
  }
  return true;
}

// Δ-freeness via one bitset intersection per arc.
inline bool is_delta_free(const AonDag& g) {
  auto rows = succ_rows(g);
  std::size_t words = rows.empty() ? 0 : rows[0].size();
  for (auto [a, b] : g.arc_indices()) {
    for (std::size_t w = 0; w < words; ++w) {
      if (rows[a][w] & rows[b][w]) return false;
    }
  }
  return true;
}

// Longest α to ω node-weighted path by whole-path enumeration.
inline int longest_path_exhaustive(const AonDag& g) {
  int n = g.node_count();
  int best = 0;
  std::function<void(int, int)> walk = [&](int v, int total) {
    total += g.node_at(v).duration;
    if (g.out(v).empty()) {
      best = std::max(best, total);
      return;
    }
    for (int w : g.out(v)) walk(w, total);
  };
  for (int v = 0; v < n; ++v) {
    if (g.in(v).empty()) walk(v, 0);
  }
  return best;
}

// Levels by memoized longest chain from the sources; checks against the
// library's single forward sweep.
inline std::map<std::string, int> levels_by_dfs(const AonDag& g) {
  int n = g.node_count();
  std::vector<int> memo(n, 0);
  std::function<int(int)> depth = [&](int v) {
    if (memo[v]) return memo[v];
    int best = 1;
    for (int u : g.in(v)) best = std::max(best, depth(u) + 1);
    return memo[v] = best;
  };
  std::map<std::string, int> out;
  for (int v = 0; v < n; ++v) out[g.node_at(v).code] = depth(v);
  return out;
}

// Event reachability by Floyd-Warshall; empty path counts, so the
// activity-level relation is head(u) == tail(v) or a real path between.
inline PairSet aoa_pairs(const AoaDag& aoa) {
  std::map<int, int> idx;
  for (const auto& e : aoa.events) idx[e.id] = static_cast<int>(idx.size());
  int n = static_cast<int>(idx.size());
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (const AoaArc& a : aoa.arcs) reach[idx.at(a.tail)][idx.at(a.head)] = 1;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (int j = 0; j < n; ++j) {
        if (reach[k][j]) reach[i][j] = 1;
      }
    }
  }
  PairSet out;
  for (const AoaArc& u : aoa.arcs) {
    for (const AoaArc& v : aoa.arcs) {
      if (u.label == v.label) continue;
      if (u.head == v.tail || reach[idx.at(u.head)][idx.at(v.tail)]) {
        out.insert({u.label, v.label});
      }
    }
  }
  return out;
}

// Precedence equivalence judged entirely by this header: the AoN closure
// restricted to non-dummy activities must equal the network relation
// restricted to the same labels. One plain DFS per activity keeps this
// usable on the randomized suite's larger networks.
inline bool equivalent(const AonDag& aon, const AoaDag& aoa) {
  std::map<int, int> idx;
  for (const auto& e : aoa.events) idx[e.id] = static_cast<int>(idx.size());
  int ne = static_cast<int>(idx.size());
  std::vector<std::vector<int>> out(ne);
  std::map<std::string, const AoaArc*> by_label;
  for (const AoaArc& a : aoa.arcs) {
    out[idx.at(a.tail)].push_back(idx.at(a.head));
    by_label[a.label] = &a;
  }

  std::vector<const aoaforge::AonNode*> reals;
  for (const auto& n : aon.nodes()) {
    if (n.kind != aoaforge::NodeKind::Dummy) reals.push_back(&n);
  }
  for (const auto* n : reals) {
    if (!by_label.count(n->code)) return false;
  }

  PairSet want = reach_pairs(aon);
  for (const auto* u : reals) {
    const AoaArc* au = by_label.at(u->code);
    std::vector<char> seen(ne, 0);
    std::vector<int> stack{idx.at(au->head)};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (seen[v]) continue;
      seen[v] = 1;
      for (int w : out[v]) stack.push_back(w);
    }
    for (const auto* v : reals) {
      if (u == v) continue;
      const AoaArc* av = by_label.at(v->code);
      bool network = au->head == av->tail || seen[idx.at(av->tail)];
      bool precedence = want.count({u->code, v->code}) != 0;
      if (network != precedence) return false;
    }
  }
  return true;
}

// Partition sanity: every arc in exactly one part's product, tails/heads
// pairwise disjoint across parts, every product pair actually an arc.
inline std::vector<std::string> partition_problems(const AonDag& g,
                                                   const BipartitePartition& p) {
  std::vector<std::string> problems;
  std::set<std::string> all_tails, all_heads;
  std::map<Arc, int> covered;
  for (const auto& part : p.parts) {
    if (part.tails.empty() || part.heads.empty()) {
      problems.push_back("empty side");
    }
    for (const auto& t : part.tails) {
      if (!all_tails.insert(t).second) {
        problems.push_back("tail '" + t + "' in two parts");
      }
    }
    for (const auto& h : part.heads) {
      if (!all_heads.insert(h).second) {
        problems.push_back("head '" + h + "' in two parts");
      }
    }
    for (const auto& t : part.tails) {
      for (const auto& h : part.heads) {
        if (!g.has_arc(t, h)) {
          problems.push_back("pair (" + t + ", " + h + ") is not an arc");
        }
        ++covered[{t, h}];
      }
    }
  }
  for (const Arc& a : g.arcs()) {
    auto it = covered.find(a);
    if (it == covered.end()) {
      problems.push_back("arc (" + a.tail + ", " + a.head + ") uncovered");
    } else if (it->second != 1) {
      problems.push_back("arc (" + a.tail + ", " + a.head + ") covered " +
                         std::to_string(it->second) + " times");
    }
  }
  return problems;
}

}  // namespace oracles
