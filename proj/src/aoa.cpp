#include "aoaforge/aoa.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace aoaforge {

std::string_view grouping_kind_name(GroupingKind kind) {
  switch (kind) {
    case GroupingKind::TailGroup: return "tail_group";
    case GroupingKind::HeadGroup: return "head_group";
    case GroupingKind::Singleton: return "singleton";
    case GroupingKind::CanonicalFallback: return "canonical_fallback";
  }
  return "singleton";
}

namespace {

// Mutable adjacency used during elimination; node codes are the keys.
struct Working {
  std::map<std::string, std::set<std::string>> succ, pred;

  void add_node(const std::string& code) {
    succ.try_emplace(code);
    pred.try_emplace(code);
  }
  void add_arc(const std::string& t, const std::string& h) {
    succ[t].insert(h);
    pred[h].insert(t);
  }
  void remove_arc(const std::string& t, const std::string& h) {
    succ[t].erase(h);
    pred[h].erase(t);
  }

  static Working from(const AonDag& g) {
    Working w;
    for (const AonNode& n : g.nodes()) w.add_node(n.code);
    for (const Arc& a : g.arcs()) w.add_arc(a.tail, a.head);
    return w;
  }
};

// Bar arcs of all Z configurations: (b, c) such that some other
// predecessor a of c has succ(b) ⊄ succ(a).
std::set<Arc> compute_bars(const Working& w) {
  std::set<Arc> bars;
  for (const auto& [c, preds] : w.pred) {
    if (preds.size() < 2) continue;
    for (const std::string& b : preds) {
      if (bars.count({b, c})) continue;
      const std::set<std::string>& sb = w.succ.at(b);
      for (const std::string& a : preds) {
        if (a == b) continue;
        const std::set<std::string>& sa = w.succ.at(a);
        if (!std::includes(sa.begin(), sa.end(), sb.begin(), sb.end())) {
          bars.insert({b, c});
          break;
        }
      }
    }
  }
  return bars;
}

struct Group {
  GroupingKind kind;
  std::vector<Arc> bars;  // sorted by (tail, head)
};

// Reversed-pair ordering used both to rank groups and to pick each
// group's representative bar.
std::pair<std::string_view, std::string_view> head_tail_key(const Arc& a) {
  return {a.head, a.tail};
}

std::vector<Group> plan_groups(const Working& w, const std::set<Arc>& bars) {
  std::vector<Group> groups;
  std::set<Arc> remaining = bars;

  // Bars into one head collapse together when their tails cannot be told
  // apart by successor set; rerouting them through one dummy then changes
  // nothing about what those tails reach.
  std::map<std::string, std::vector<std::string>> by_head;
  for (const Arc& bar : remaining) by_head[bar.head].push_back(bar.tail);
  for (const auto& [head, tails] : by_head) {
    if (tails.size() < 2) continue;
    std::map<std::vector<std::string>, std::vector<std::string>> classes;
    for (const std::string& t : tails) {
      const auto& s = w.succ.at(t);
      classes[std::vector<std::string>(s.begin(), s.end())].push_back(t);
    }
    for (const auto& [unused, ts] : classes) {
      if (ts.size() < 2) continue;
      Group grp{GroupingKind::HeadGroup, {}};
      for (const std::string& t : ts) {
        grp.bars.push_back({t, head});
        remaining.erase({t, head});
      }
      std::sort(grp.bars.begin(), grp.bars.end());
      groups.push_back(std::move(grp));
    }
  }

  // Dually for bars out of one tail, keyed by predecessor set.
  std::map<std::string, std::vector<std::string>> by_tail;
  for (const Arc& bar : remaining) by_tail[bar.tail].push_back(bar.head);
  for (const auto& [tail, heads] : by_tail) {
    if (heads.size() < 2) continue;
    std::map<std::vector<std::string>, std::vector<std::string>> classes;
    for (const std::string& h : heads) {
      const auto& p = w.pred.at(h);
      classes[std::vector<std::string>(p.begin(), p.end())].push_back(h);
    }
    for (const auto& [unused, hs] : classes) {
      if (hs.size() < 2) continue;
      Group grp{GroupingKind::TailGroup, {}};
      for (const std::string& h : hs) {
        grp.bars.push_back({tail, h});
        remaining.erase({tail, h});
      }
      std::sort(grp.bars.begin(), grp.bars.end());
      groups.push_back(std::move(grp));
    }
  }

  for (const Arc& bar : remaining) {
    groups.push_back({GroupingKind::Singleton, {bar}});
  }

  std::sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) {
    auto key = [](const Group& g) {
      auto best = head_tail_key(g.bars.front());
      for (const Arc& bar : g.bars) best = std::min(best, head_tail_key(bar));
      return best;
    };
    return key(a) < key(b);
  });
  return groups;
}

class DummyNamer {
 public:
  explicit DummyNamer(const AonDag& g) {
    for (const AonNode& n : g.nodes()) taken_.insert(n.code);
  }
  std::string next() {
    std::string name;
    do {
      name = "f" + std::to_string(counter_++);
    } while (taken_.count(name));
    taken_.insert(name);
    return name;
  }
  void reset() { counter_ = 1; }

 private:
  std::set<std::string> taken_;
  int counter_ = 1;
};

void materialize(Working& w, const Group& grp, const std::string& name,
                 std::vector<DummyRecord>& dummies) {
  std::set<std::string> tails, heads;
  for (const Arc& bar : grp.bars) {
    tails.insert(bar.tail);
    heads.insert(bar.head);
    w.remove_arc(bar.tail, bar.head);
  }
  w.add_node(name);
  for (const std::string& t : tails) w.add_arc(t, name);
  for (const std::string& h : heads) w.add_arc(name, h);
  dummies.push_back({name, grp.bars, grp.kind});
}

}  // namespace

EliminationResult eliminate_z(const AonDag& g, int sweep_cap) {
  ValidationReport structure = validate_structure(g);
  if (!structure.ok()) {
    throw ValidationError("not a well-formed dag:\n" + structure.to_string());
  }

  Working w = Working::from(g);
  DummyNamer namer(g);
  EliminationResult result;
  if (sweep_cap < 0) sweep_cap = g.node_count();
  const int dummy_cap = static_cast<int>(transitive_closure(g).size());

  auto fall_back = [&] {
    // Restart from the input and reroute every arc through its own dummy.
    // Each original node then feeds only single-in single-out dummies, so
    // no node pair can disagree on successors: Z-free in one pass, with
    // one dummy per arc (never more than the precedence-pair count).
    w = Working::from(g);
    namer.reset();
    result.dummies.clear();
    std::vector<Arc> arcs = g.arcs();
    std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
      return head_tail_key(a) < head_tail_key(b);
    });
    for (const Arc& a : arcs) {
      materialize(w, {GroupingKind::CanonicalFallback, {a}}, namer.next(),
                  result.dummies);
    }
    result.used_fallback = true;
  };

  while (true) {
    std::set<Arc> bars = compute_bars(w);
    if (bars.empty()) break;
    if (result.iterations >= sweep_cap) {
      fall_back();
      break;
    }
    for (const Group& grp : plan_groups(w, bars)) {
      materialize(w, grp, namer.next(), result.dummies);
    }
    ++result.iterations;
    if (static_cast<int>(result.dummies.size()) > dummy_cap) {
      fall_back();
      break;
    }
  }

  std::vector<AonNode> nodes = g.nodes();
  for (const DummyRecord& d : result.dummies) {
    nodes.push_back({d.id, NodeKind::Dummy, 0});
  }
  std::vector<Arc> arcs;
  for (const auto& [t, hs] : w.succ) {
    for (const std::string& h : hs) arcs.push_back({t, h});
  }
  result.graph = AonDag(std::move(nodes), std::move(arcs));
  return result;
}

std::string AoaEvent::origin_string() const {
  switch (origin) {
    case EventOrigin::Source: return "source";
    case EventOrigin::Sink: return "sink";
    case EventOrigin::Bipartite:
      return "bipartite(" + std::to_string(part) + ")";
  }
  return "source";
}

const AoaArc* AoaDag::find_arc(std::string_view label) const {
  auto it = std::lower_bound(
      arcs.begin(), arcs.end(), label,
      [](const AoaArc& a, std::string_view l) { return a.label < l; });
  if (it == arcs.end() || it->label != label) return nullptr;
  return &*it;
}

AoaDag build_aoa(const AonDag& g, const BipartitePartition& p) {
  int k = static_cast<int>(p.parts.size());
  std::map<std::string, int> tail_part;  // node → part whose X holds it
  std::map<std::string, int> head_part;  // node → part whose Y holds it
  std::size_t covered = 0;
  for (int i = 0; i < k; ++i) {
    const CompleteBipartite& part = p.parts[i];
    for (const std::string& t : part.tails) {
      if (!tail_part.emplace(t, i).second) {
        throw InternalError("tail sets overlap on '" + t + "'");
      }
    }
    for (const std::string& h : part.heads) {
      if (!head_part.emplace(h, i).second) {
        throw InternalError("head sets overlap on '" + h + "'");
      }
    }
    covered += part.tails.size() * part.heads.size();
  }
  if (covered != static_cast<std::size_t>(g.arc_count())) {
    throw InternalError("partition does not cover the arc set");
  }

  // Symbolic event numbers before topological renaming: 0 = source,
  // 1..k = parts, k+1 = sink.
  const int source_sym = 0, sink_sym = k + 1;
  struct PendingArc {
    std::string label;
    int tail_sym, head_sym;
    ArcKind kind;
    int duration;
  };
  std::vector<PendingArc> pending;
  for (const AonNode& n : g.nodes()) {
    int idx = g.index_of(n.code);
    int tail_sym = source_sym;
    if (!g.in(idx).empty()) {
      auto it = head_part.find(n.code);
      if (it == head_part.end()) {
        throw InternalError("node '" + n.code + "' missing from head sets");
      }
      tail_sym = it->second + 1;
    }
    int head_sym = sink_sym;
    if (!g.out(idx).empty()) {
      auto it = tail_part.find(n.code);
      if (it == tail_part.end()) {
        throw InternalError("node '" + n.code + "' missing from tail sets");
      }
      head_sym = it->second + 1;
    }
    if (tail_sym == head_sym) {
      throw InternalError("self loop at '" + n.code + "'");
    }
    ArcKind kind =
        n.kind == NodeKind::Dummy ? ArcKind::Dummy : ArcKind::Real;
    pending.push_back({n.code, tail_sym, head_sym, kind,
                       kind == ArcKind::Dummy ? 0 : n.duration});
  }

  // Topological ids, smallest symbolic number first among ready events;
  // the source is the unique in-degree-zero event and every part reaches
  // the sink, so source = 1 and sink = event count.
  std::vector<int> indeg(k + 2, 0);
  std::vector<std::vector<int>> adj(k + 2);
  for (const PendingArc& a : pending) {
    adj[a.tail_sym].push_back(a.head_sym);
    ++indeg[a.head_sym];
  }
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int s = 0; s < k + 2; ++s) {
    if (indeg[s] == 0) ready.push(s);
  }
  std::vector<int> id_of(k + 2, 0);
  int next_id = 0;
  while (!ready.empty()) {
    int s = ready.top();
    ready.pop();
    id_of[s] = ++next_id;
    for (int t : adj[s]) {
      if (--indeg[t] == 0) ready.push(t);
    }
  }
  if (next_id != k + 2) {
    throw InternalError("event network is cyclic");
  }

  AoaDag aoa;
  aoa.events.resize(k + 2);
  for (int s = 0; s < k + 2; ++s) {
    AoaEvent e;
    e.id = id_of[s];
    if (s == source_sym) {
      e.origin = EventOrigin::Source;
    } else if (s == sink_sym) {
      e.origin = EventOrigin::Sink;
    } else {
      e.origin = EventOrigin::Bipartite;
      e.part = s;
    }
    aoa.events[e.id - 1] = e;
  }
  aoa.source_id = id_of[source_sym];
  aoa.sink_id = id_of[sink_sym];
  for (const PendingArc& a : pending) {
    aoa.arcs.push_back(
        {a.label, id_of[a.tail_sym], id_of[a.head_sym], a.kind, a.duration});
  }
  std::sort(aoa.arcs.begin(), aoa.arcs.end(),
            [](const AoaArc& a, const AoaArc& b) { return a.label < b.label; });
  return aoa;
}

std::string EquivalenceReport::to_string() const {
  if (ok) return "equivalent";
  std::ostringstream os;
  os << "missing:";
  for (const Arc& a : missing) os << " (" << a.tail << ", " << a.head << ")";
  os << "\nspurious:";
  for (const Arc& a : spurious) os << " (" << a.tail << ", " << a.head << ")";
  return os.str();
}

namespace {

// Event-to-event reachability; works on arbitrary (even corrupted)
// networks as long as they stay acyclic.
BitMatrix event_reachability(const AoaDag& aoa,
                             const std::map<int, int>& index_of) {
  int n = static_cast<int>(aoa.events.size());
  std::vector<std::vector<int>> adj(n);
  std::vector<int> indeg(n, 0);
  for (const AoaArc& a : aoa.arcs) {
    adj[index_of.at(a.tail)].push_back(index_of.at(a.head));
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
    for (int w : adj[v]) {
      if (--indeg[w] == 0) ready.push(w);
    }
  }
  if (static_cast<int>(order.size()) != n) {
    throw GraphError("event network is cyclic");
  }
  BitMatrix reach(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (int w : adj[*it]) {
      reach.set(*it, w);
      reach.or_row(*it, w);
    }
  }
  return reach;
}

std::map<int, int> event_index(const AoaDag& aoa) {
  std::map<int, int> index_of;
  for (std::size_t i = 0; i < aoa.events.size(); ++i) {
    if (!index_of.emplace(aoa.events[i].id, static_cast<int>(i)).second) {
      throw GraphError("duplicate event id " +
                       std::to_string(aoa.events[i].id));
    }
  }
  return index_of;
}

}  // namespace

EquivalenceReport verify_equivalence(const AonDag& aon, const AoaDag& aoa) {
  std::map<int, int> index_of = event_index(aoa);
  for (const AoaArc& a : aoa.arcs) {
    if (!index_of.count(a.tail) || !index_of.count(a.head)) {
      throw GraphError("arc '" + a.label + "' references an unknown event");
    }
  }

  std::vector<const AonNode*> acts;
  for (const AonNode& n : aon.nodes()) {
    if (n.kind != NodeKind::Dummy) acts.push_back(&n);
  }
  std::vector<const AoaArc*> arc_of;
  for (const AonNode* n : acts) {
    const AoaArc* a = aoa.find_arc(n->code);
    if (!a) {
      throw GraphError("activity '" + n->code + "' has no arc in the network");
    }
    arc_of.push_back(a);
  }

  BitMatrix reach = event_reachability(aoa, index_of);
  PrecedenceRelation closure = transitive_closure(aon);

  EquivalenceReport report;
  for (std::size_t i = 0; i < acts.size(); ++i) {
    for (std::size_t j = 0; j < acts.size(); ++j) {
      if (i == j) continue;
      int ui = index_of.at(arc_of[i]->head);
      int vj = index_of.at(arc_of[j]->tail);
      bool network = ui == vj || reach.get(ui, vj);
      bool precedence = closure.precedes(acts[i]->code, acts[j]->code);
      if (precedence && !network) {
        report.missing.push_back({acts[i]->code, acts[j]->code});
      } else if (network && !precedence) {
        report.spurious.push_back({acts[i]->code, acts[j]->code});
      }
    }
  }
  report.ok = report.missing.empty() && report.spurious.empty();
  return report;
}

bool line_graph_roundtrip_check(const AonDag& g, const AoaDag& aoa) {
  std::vector<std::string> labels;
  for (const AoaArc& a : aoa.arcs) labels.push_back(a.label);
  std::sort(labels.begin(), labels.end());
  std::vector<std::string> codes;
  for (const AonNode& n : g.nodes()) codes.push_back(n.code);
  if (labels != codes) return false;

  std::map<int, std::vector<const AoaArc*>> by_tail;
  for (const AoaArc& a : aoa.arcs) by_tail[a.tail].push_back(&a);
  std::vector<Arc> derived;
  for (const AoaArc& u : aoa.arcs) {
    auto it = by_tail.find(u.head);
    if (it == by_tail.end()) continue;
    for (const AoaArc* v : it->second) {
      derived.push_back({u.label, v->label});
    }
  }
  std::sort(derived.begin(), derived.end());
  return derived == g.arcs();
}

namespace {

ConversionResult convert_impl(AonDag aon) {
  ConversionResult r;
  r.aon = std::move(aon);
  EliminationResult elim = eliminate_z(r.aon);
  r.eliminated = std::move(elim.graph);
  r.dummies = std::move(elim.dummies);
  try {
    r.partition = partition_bipartites(r.eliminated);
  } catch (const GraphError& e) {
    throw InternalError(std::string("elimination left a Z configuration: ") +
                        e.what());
  }
  r.aoa = build_aoa(r.eliminated, r.partition);

  EquivalenceReport eq = verify_equivalence(r.aon, r.aoa);
  if (!eq.ok) {
    throw InternalError("precedence oracle failed\n" + eq.to_string());
  }
  if (!line_graph_roundtrip_check(r.eliminated, r.aoa)) {
    throw InternalError("line graph round trip failed");
  }

  r.stats.event_count = static_cast<int>(r.aoa.events.size());
  for (const AoaArc& a : r.aoa.arcs) {
    (a.kind == ArcKind::Real ? r.stats.real_arc_count
                             : r.stats.dummy_arc_count)++;
  }
  r.stats.bipartite_count = static_cast<int>(r.partition.parts.size());
  r.stats.z_bar_count = static_cast<int>(z_bar_set(r.aon).size());
  r.stats.iterations = elim.iterations;
  r.stats.used_fallback = elim.used_fallback;
  return r;
}

}  // namespace

ConversionResult convert(const ScheduleTable& t, AugmentPolicy augment) {
  AonDag aon = build_aon(t, augment);
  ValidationReport report = validate_dag(aon);
  if (!report.ok()) {
    throw ValidationError("invalid activity graph:\n" + report.to_string());
  }
  return convert_impl(std::move(aon));
}

ConversionResult convert_graph(const AonDag& g) {
  ValidationReport report = validate_structure(g);
  if (!report.ok()) {
    throw ValidationError("invalid activity graph:\n" + report.to_string());
  }
  return convert_impl(g);
}

}  // namespace aoaforge
