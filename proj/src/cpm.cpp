#include "aoaforge/cpm.hpp"

#include <algorithm>
#include <queue>

namespace aoaforge {

CpmResult schedule(const AoaDag& aoa) {
  int n = static_cast<int>(aoa.events.size());
  std::map<int, int> index_of;
  for (int i = 0; i < n; ++i) index_of[aoa.events[i].id] = i;

  std::vector<std::vector<const AoaArc*>> out(n);
  std::vector<int> indeg(n, 0);
  for (const AoaArc& a : aoa.arcs) {
    out[index_of.at(a.tail)].push_back(&a);
    ++indeg[index_of.at(a.head)];
  }

  std::vector<int> order;
  order.reserve(n);
  std::queue<int> ready;
  for (int i = 0; i < n; ++i) {
    if (indeg[i] == 0) ready.push(i);
  }
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop();
    order.push_back(v);
    for (const AoaArc* a : out[v]) {
      if (--indeg[index_of.at(a->head)] == 0) ready.push(index_of.at(a->head));
    }
  }
  if (static_cast<int>(order.size()) != n) {
    throw InternalError("event network is cyclic");
  }

  std::vector<int> early(n, 0);
  for (int v : order) {
    for (const AoaArc* a : out[v]) {
      int h = index_of.at(a->head);
      early[h] = std::max(early[h], early[v] + a->duration);
    }
  }
  int makespan = early[index_of.at(aoa.sink_id)];

  std::vector<int> late(n, makespan);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (const AoaArc* a : out[*it]) {
      late[*it] = std::min(late[*it], late[index_of.at(a->head)] - a->duration);
    }
  }

  CpmResult r;
  r.makespan = makespan;
  for (int i = 0; i < n; ++i) {
    r.early[aoa.events[i].id] = early[i];
    r.late[aoa.events[i].id] = late[i];
  }
  for (const AoaArc& a : aoa.arcs) {
    r.total_float[a.label] =
        late[index_of.at(a.head)] - early[index_of.at(a.tail)] - a.duration;
  }

  // Zero-float arcs out of a critical event always reach another critical
  // event, so the greedy walk below is well defined; picking the smallest
  // label at each step makes it the lexicographically least such walk.
  int at = index_of.at(aoa.source_id);
  int sink = index_of.at(aoa.sink_id);
  std::size_t steps = 0;
  while (at != sink) {
    const AoaArc* chosen = nullptr;
    for (const AoaArc* a : out[at]) {
      if (r.total_float.at(a->label) != 0) continue;
      if (!chosen || a->label < chosen->label) chosen = a;
    }
    if (!chosen || ++steps > aoa.arcs.size()) {
      throw InternalError("no zero-float continuation from event " +
                          std::to_string(aoa.events[at].id));
    }
    if (chosen->kind == ArcKind::Real) r.critical.push_back(chosen->label);
    at = index_of.at(chosen->head);
  }
  return r;
}

int aon_longest_path(const AonDag& g) {
  std::vector<int> order = topological_order(g);
  std::vector<int> dp(g.node_count(), 0);
  int best = 0;
  for (int v : order) {
    int incoming = 0;
    for (int u : g.in(v)) incoming = std::max(incoming, dp[u]);
    dp[v] = incoming + g.node_at(v).duration;
    best = std::max(best, dp[v]);
  }
  return best;
}

}  // namespace aoaforge
