#include "aoaforge/dot.hpp"

#include <sstream>

namespace aoaforge {

namespace {

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string render_dot(const AonDag& g) {
  std::ostringstream os;
  os << "digraph aon {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=box];\n";
  for (const auto& [level, codes] : group_levels(topological_levels(g))) {
    os << "  { rank=same;";
    for (const std::string& c : codes) os << ' ' << quoted(c) << ';';
    os << " }\n";
  }
  for (const AonNode& n : g.nodes()) {
    os << "  " << quoted(n.code) << " [label="
       << quoted(n.code + " (" + std::to_string(n.duration) + ")");
    if (n.kind == NodeKind::Dummy) os << ", style=dashed";
    os << "];\n";
  }
  for (const Arc& a : g.arcs()) {
    os << "  " << quoted(a.tail) << " -> " << quoted(a.head) << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string render_dot(const AoaDag& aoa) {
  std::ostringstream os;
  os << "digraph aoa {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle];\n";
  for (const AoaEvent& e : aoa.events) {
    os << "  " << e.id << ";\n";
  }
  for (const AoaArc& a : aoa.arcs) {
    os << "  " << a.tail << " -> " << a.head << " [label=";
    if (a.kind == ArcKind::Real) {
      os << quoted(a.label + "(" + std::to_string(a.duration) + ")") << "];\n";
    } else {
      os << quoted(a.label) << ", style=dashed];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace aoaforge
