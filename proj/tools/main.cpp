#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "aoaforge/aoa.hpp"
#include "aoaforge/cpm.hpp"
#include "aoaforge/dot.hpp"
#include "aoaforge/gen.hpp"
#include "aoaforge/json_io.hpp"
#include "aoaforge/schedule.hpp"

#if defined(_WIN32)
#include <io.h>
#define AOAFORGE_ISATTY _isatty
#define AOAFORGE_FILENO _fileno
#else
#include <unistd.h>
#define AOAFORGE_ISATTY isatty
#define AOAFORGE_FILENO fileno
#endif

namespace {

using namespace aoaforge;

bool use_color() {
  if (std::getenv("AOAFORGE_NO_COLOR")) return false;
  return AOAFORGE_ISATTY(AOAFORGE_FILENO(stderr));
}

void print_error(const std::string& msg) {
  if (use_color()) {
    std::cerr << "\x1b[31merror:\x1b[0m " << msg << '\n';
  } else {
    std::cerr << "error: " << msg << '\n';
  }
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write '" + path + "'");
  out << text;
}

struct CommonOpts {
  std::string input;
  std::string output;
  std::string format;
  bool stats = false;
  bool strict = false;

  AugmentPolicy policy() const {
    return strict ? AugmentPolicy::Strict : AugmentPolicy::Auto;
  }
};

void add_io(CLI::App* cmd, CommonOpts& o, std::string default_format,
            std::vector<std::string> formats) {
  cmd->add_option("input,-i,--input", o.input, "input table (default stdin)");
  cmd->add_option("-o,--output", o.output, "output path (default stdout)");
  o.format = std::move(default_format);
  if (!formats.empty()) {
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember(formats));
  }
  cmd->add_flag("--strict-alpha-omega", o.strict,
                "require explicit α/ω (START/END) rows");
}

std::string stats_summary(const NetworkStats& s) {
  std::ostringstream os;
  os << "events=" << s.event_count << " real_arcs=" << s.real_arc_count
     << " dummy_arcs=" << s.dummy_arc_count
     << " bipartites=" << s.bipartite_count << " z_bars=" << s.z_bar_count
     << " iterations=" << s.iterations
     << " fallback=" << (s.used_fallback ? "yes" : "no");
  return os.str();
}

// Test hook: with AOAFORGE_INJECT_FAULT set, break the network after the
// pipeline's own checks so the re-verification below must fail, proving
// that a wrong network can never leave the process with exit code 0.
void maybe_inject_fault(ConversionResult& r) {
  if (!std::getenv("AOAFORGE_INJECT_FAULT")) return;
  for (AoaArc& a : r.aoa.arcs) {
    if (a.head == r.aoa.sink_id || a.tail == r.aoa.sink_id) continue;
    a.head = r.aoa.sink_id;
    break;
  }
  EquivalenceReport report = verify_equivalence(r.aon, r.aoa);
  if (!report.ok) {
    throw InternalError("precedence oracle failed\n" + report.to_string());
  }
}

ConversionResult run_pipeline(const CommonOpts& o) {
  ScheduleTable t = parse_schedule_table(read_input(o.input));
  ConversionResult r = convert(t, o.policy());
  maybe_inject_fault(r);
  return r;
}

int cmd_convert(const CommonOpts& o) {
  ConversionResult r = run_pipeline(o);
  if (o.format == "dot") {
    std::string dot = render_dot(r.aoa);
    if (o.stats) dot += "// stats: " + stats_summary(r.stats) + "\n";
    write_output(o.output, dot);
  } else {
    write_output(o.output, dump_json(aoa_to_json(r.aoa, r.stats)));
  }
  if (o.stats) std::cerr << stats_summary(r.stats) << '\n';
  return 0;
}

int cmd_check(const CommonOpts& o) {
  ConversionResult r = run_pipeline(o);
  std::ostringstream os;
  os << "ok: " << stats_summary(r.stats) << '\n';
  write_output(o.output, os.str());
  return 0;
}

int cmd_levels(const CommonOpts& o) {
  ScheduleTable t = parse_schedule_table(read_input(o.input));
  AonDag g = build_aon(t, o.policy());
  ValidationReport report = validate_dag(g);
  if (!report.ok()) {
    throw ValidationError("invalid activity graph:\n" + report.to_string());
  }
  auto grouped = group_levels(topological_levels(g));
  if (o.format == "dot") {
    write_output(o.output, render_dot(g));
  } else if (o.format == "json") {
    ordered_json j;
    j["levels"] = ordered_json::object();
    for (const auto& [level, codes] : grouped) {
      j["levels"][std::to_string(level)] = codes;
    }
    write_output(o.output, dump_json(j));
  } else {
    std::ostringstream os;
    os << "level,codes\n";
    for (const auto& [level, codes] : grouped) {
      os << level << ',';
      for (std::size_t i = 0; i < codes.size(); ++i) {
        if (i) os << ';';
        os << codes[i];
      }
      os << '\n';
    }
    write_output(o.output, os.str());
  }
  return 0;
}

int cmd_cpm(const CommonOpts& o) {
  ConversionResult r = run_pipeline(o);
  CpmResult cpm = schedule(r.aoa);
  ordered_json j = aoa_to_json(r.aoa, r.stats);
  j["cpm"] = cpm_to_json(cpm);
  write_output(o.output, dump_json(j));
  if (o.stats) std::cerr << stats_summary(r.stats) << '\n';
  return 0;
}

int cmd_gen(const CommonOpts& o, int nodes, double density,
            std::uint64_t seed) {
  write_output(o.output, emit_table(generate_random_table(nodes, density, seed)));
  return 0;
}

int cmd_render(const CommonOpts& o, const std::string& graph) {
  if (graph == "aon") {
    ScheduleTable t = parse_schedule_table(read_input(o.input));
    AonDag g = build_aon(t, o.policy());
    ValidationReport report = validate_dag(g);
    if (!report.ok()) {
      throw ValidationError("invalid activity graph:\n" + report.to_string());
    }
    write_output(o.output, render_dot(g));
  } else {
    ConversionResult r = run_pipeline(o);
    write_output(o.output, render_dot(r.aoa));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"activity-on-node → activity-on-arc converter"};
  app.require_subcommand(1);

  CommonOpts convert_opts, check_opts, levels_opts, cpm_opts, gen_opts,
      render_opts;

  CLI::App* convert_cmd =
      app.add_subcommand("convert", "convert a schedule table to an event network");
  add_io(convert_cmd, convert_opts, "json", {"json", "dot"});
  convert_cmd->add_flag("--stats", convert_opts.stats,
                        "print network statistics to stderr");

  CLI::App* check_cmd =
      app.add_subcommand("check", "run the full pipeline and report success");
  add_io(check_cmd, check_opts, "", {});

  CLI::App* levels_cmd =
      app.add_subcommand("levels", "print topological levels of the activity graph");
  add_io(levels_cmd, levels_opts, "csv", {"csv", "json", "dot"});

  CLI::App* cpm_cmd = app.add_subcommand(
      "cpm", "convert and compute the critical-path schedule");
  add_io(cpm_cmd, cpm_opts, "json", {"json"});
  cpm_cmd->add_flag("--stats", cpm_opts.stats,
                    "print network statistics to stderr");

  int gen_nodes = 10;
  double gen_density = 0.2;
  std::uint64_t gen_seed = 1;
  CLI::App* gen_cmd =
      app.add_subcommand("gen", "generate a random schedule table");
  gen_cmd->add_option("-o,--output", gen_opts.output,
                      "output path (default stdout)");
  gen_cmd->add_option("--nodes", gen_nodes, "activity count")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--density", gen_density, "arc probability")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", gen_seed, "random seed");

  std::string render_graph = "aoa";
  CLI::App* render_cmd =
      app.add_subcommand("render", "render a graph as DOT");
  add_io(render_cmd, render_opts, "dot", {"dot"});
  render_cmd->add_option("--graph", render_graph, "which graph to draw")
      ->check(CLI::IsMember({"aon", "aoa"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (convert_cmd->parsed()) return cmd_convert(convert_opts);
    if (check_cmd->parsed()) return cmd_check(check_opts);
    if (levels_cmd->parsed()) return cmd_levels(levels_opts);
    if (cpm_cmd->parsed()) return cmd_cpm(cpm_opts);
    if (gen_cmd->parsed()) return cmd_gen(gen_opts, gen_nodes, gen_density, gen_seed);
    if (render_cmd->parsed()) return cmd_render(render_opts, render_graph);
  } catch (const InternalError& e) {
    print_error(std::string("internal invariant violation: ") + e.what());
    return 2;
  } catch (const Error& e) {
    print_error(e.what());
    return 1;
  } catch (const std::exception& e) {
    print_error(std::string("unexpected failure: ") + e.what());
    return 2;
  }
  return 0;
}
