#include "aoaforge/schedule.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace aoaforge {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string canonical_code(std::string_view raw) {
  if (raw == "START") return std::string(kAlpha);
  if (raw == "END") return std::string(kOmega);
  return std::string(raw);
}

bool is_marker(std::string_view code) {
  return code == kAlpha || code == kOmega;
}

}  // namespace

bool ScheduleTable::has_code(std::string_view code) const {
  return std::any_of(rows.begin(), rows.end(),
                     [&](const ScheduleRow& r) { return r.code == code; });
}

ScheduleTable parse_schedule_table(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  ScheduleTable table;
  std::vector<int> row_lines;
  bool header_seen = false;
  bool has_duration_column = true;

  int line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::string_view stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;

    std::vector<std::string_view> fields = split(stripped, ',');
    for (auto& f : fields) f = trim(f);

    if (!header_seen) {
      if (fields.size() == 3 && fields[0] == "code" &&
          fields[1] == "duration" && fields[2] == "predecessors") {
        has_duration_column = true;
      } else if (fields.size() == 2 && fields[0] == "code" &&
                 fields[1] == "predecessors") {
        has_duration_column = false;
      } else {
        throw ParseError(line_no,
                         "expected header 'code,duration,predecessors'");
      }
      header_seen = true;
      continue;
    }

    std::size_t expected = has_duration_column ? 3 : 2;
    if (fields.size() != expected) {
      throw ParseError(line_no, "expected " + std::to_string(expected) +
                                    " fields, got " +
                                    std::to_string(fields.size()));
    }

    ScheduleRow row;
    if (fields[0].empty()) throw ParseError(line_no, "empty activity code");
    if (fields[0] == "-" || fields[0].find(';') != std::string_view::npos) {
      throw ParseError(line_no,
                       "invalid activity code '" + std::string(fields[0]) + "'");
    }
    row.code = canonical_code(fields[0]);
    if (table.has_code(row.code)) {
      throw ParseError(line_no, "duplicate code '" + row.code + "'");
    }

    if (has_duration_column) {
      std::string_view d = fields[1];
      int value = 0;
      auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), value);
      if (ec != std::errc() || ptr != d.data() + d.size() || value < 0) {
        throw ParseError(line_no, "malformed duration '" + std::string(d) +
                                      "' for code " + row.code);
      }
      row.duration = value;
    }

    std::string_view preds = fields[has_duration_column ? 2 : 1];
    if (!preds.empty() && preds != "-") {
      for (std::string_view p : split(preds, ';')) {
        p = trim(p);
        if (p.empty()) {
          throw ParseError(line_no,
                           "empty predecessor entry for code " + row.code);
        }
        std::string code = canonical_code(p);
        if (code == row.code) {
          throw ParseError(line_no, "self-precedence on code " + row.code);
        }
        if (std::find(row.predecessors.begin(), row.predecessors.end(),
                      code) != row.predecessors.end()) {
          throw ParseError(line_no, "duplicate predecessor '" + code +
                                        "' for code " + row.code);
        }
        row.predecessors.push_back(std::move(code));
      }
    }

    table.rows.push_back(std::move(row));
    row_lines.push_back(line_no);
  }

  if (!header_seen) {
    throw ParseError(1, "expected header 'code,duration,predecessors'");
  }

  std::set<std::string_view> codes;
  for (const ScheduleRow& r : table.rows) codes.insert(r.code);
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    for (const std::string& p : table.rows[i].predecessors) {
      if (!codes.count(p) && !is_marker(p)) {
        throw ParseError(row_lines[i], "unknown predecessor code '" + p +
                                           "' for code " +
                                           table.rows[i].code);
      }
    }
  }
  return table;
}

AonDag build_aon(const ScheduleTable& t, AugmentPolicy augment) {
  bool has_alpha = t.has_code(kAlpha);
  bool has_omega = t.has_code(kOmega);
  if (augment == AugmentPolicy::Strict) {
    if (!has_alpha) {
      throw ValidationError("strict policy requires an explicit α row");
    }
    if (!has_omega) {
      throw ValidationError("strict policy requires an explicit ω row");
    }
  }

  std::vector<AonNode> nodes;
  std::vector<Arc> arcs;
  std::set<std::string> has_successor;
  for (const ScheduleRow& r : t.rows) {
    NodeKind kind = NodeKind::Real;
    if (r.code == kAlpha) kind = NodeKind::SourceMarker;
    if (r.code == kOmega) kind = NodeKind::SinkMarker;
    nodes.push_back({r.code, kind, r.duration});
    for (const std::string& p : r.predecessors) {
      arcs.push_back({p, r.code});
      has_successor.insert(p);
    }
  }

  if (augment == AugmentPolicy::Auto) {
    if (!has_alpha) {
      nodes.push_back({std::string(kAlpha), NodeKind::SourceMarker, 0});
      for (const ScheduleRow& r : t.rows) {
        if (r.predecessors.empty() && !is_marker(r.code)) {
          arcs.push_back({std::string(kAlpha), r.code});
          has_successor.insert(std::string(kAlpha));
        }
      }
    }
    if (!has_omega) {
      nodes.push_back({std::string(kOmega), NodeKind::SinkMarker, 0});
      for (const ScheduleRow& r : t.rows) {
        if (!has_successor.count(r.code) && !is_marker(r.code)) {
          arcs.push_back({r.code, std::string(kOmega)});
          has_successor.insert(r.code);
        }
      }
    }
    // Degenerate tables (no real activities) still get a spanning arc so
    // the markers are wired.
    bool alpha_bare = !has_successor.count(std::string(kAlpha));
    bool omega_bare =
        std::none_of(arcs.begin(), arcs.end(),
                     [](const Arc& a) { return a.head == kOmega; });
    if (alpha_bare && omega_bare) {
      arcs.push_back({std::string(kAlpha), std::string(kOmega)});
    }
  }

  return AonDag(std::move(nodes), std::move(arcs));
}

std::string emit_table(const ScheduleTable& t) {
  std::ostringstream os;
  os << "code,duration,predecessors\n";
  for (const ScheduleRow& r : t.rows) {
    os << r.code << ',' << r.duration << ',';
    if (r.predecessors.empty()) {
      os << '-';
    } else {
      for (std::size_t i = 0; i < r.predecessors.size(); ++i) {
        if (i) os << ';';
        os << r.predecessors[i];
      }
    }
    os << '\n';
  }
  return os.str();
}

ScheduleTable table_from_aon(const AonDag& g) {
  ScheduleTable t;
  for (const AonNode& n : g.nodes()) {
    t.rows.push_back({n.code, n.duration, g.predecessor_codes(n.code)});
  }
  return t;
}

}  // namespace aoaforge
