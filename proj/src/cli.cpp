#include "rotpath/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "rotpath/error.hpp"
#include "rotpath/greedy.hpp"
#include "rotpath/mirror.hpp"
#include "rotpath/oracle.hpp"
#include "rotpath/random.hpp"
#include "rotpath/render.hpp"
#include "rotpath/report.hpp"
#include "rotpath/rotation.hpp"

namespace rotpath {

namespace {

const std::vector<std::string> kFormats{"bracket", "steps", "levels"};

struct Caps {
  std::size_t enumerate = kDefaultEnumerationCap;
  std::size_t exact = kExactDistanceCap;
  std::size_t order = kOrderCap;
};

Caps caps_from_environment() {
  Caps caps;
  if (const char* env = std::getenv("ROTPATH_MAX_N"); env && *env) {
    try {
      const auto value = static_cast<std::size_t>(std::stoul(env));
      caps = {value, value, value};
    } catch (const std::exception&) {
      throw Error(Errc::ParseError,
                  std::string("ROTPATH_MAX_N is not a number: ") + env);
    }
  }
  return caps;
}

// A tree argument and the format it was read in.
struct TreeArg {
  StackGraph graph;
  TextFormat format;
};

TreeArg read_tree(const std::string& text, const std::string& format) {
  const TextFormat f =
      format.empty() ? detect_text_format(text) : parse_text_format(format);
  return {parse_tree_text(text, f), f};
}

TextFormat output_format(const std::string& requested, TextFormat fallback) {
  return requested.empty() ? fallback : parse_text_format(requested);
}

std::uint64_t effective_seed(const std::optional<std::uint64_t>& seed) {
  if (seed) return *seed;
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  file << contents;
  if (!file) throw std::runtime_error("cannot write " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

std::string site_text(const LiftSite& s) {
  return "(" + std::to_string(s.i) + "," + std::to_string(s.j) + ")";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"Rotation distance estimates for unlabeled binary trees",
               "rotpath"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  std::string format;
  std::string to_format;
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format,
                    "Input format (default: detect from the text)")
        ->check(CLI::IsMember(kFormats));
  };
  auto add_to = [&](CLI::App* cmd) {
    cmd->add_option("--to", to_format, "Output format (default: input format)")
        ->check(CLI::IsMember(kFormats));
  };

  std::string tree_a;
  std::string tree_b;
  std::string output;
  std::optional<std::uint64_t> seed;
  std::size_t leaves = 0;
  std::size_t site_i = 0;
  std::size_t site_j = 0;

  auto* random_cmd = app.add_subcommand("random", "Draw a uniform random tree");
  random_cmd->add_option("-n,--leaves", leaves, "Leaf count")
      ->required()
      ->check(CLI::PositiveNumber);
  random_cmd->add_option("--seed", seed, "64-bit seed");
  random_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember(kFormats));

  std::string from_format;
  auto* convert_cmd =
      app.add_subcommand("convert", "Convert trees on stdin, one per line");
  convert_cmd->add_option("--from", from_format, "Input format (default: detect)")
      ->check(CLI::IsMember(kFormats));
  convert_cmd->add_option("--to", to_format, "Output format")
      ->required()
      ->check(CLI::IsMember(kFormats));

  auto* mirror_cmd = app.add_subcommand("mirror", "Mirror image of a tree");
  mirror_cmd->add_option("tree", tree_a, "Tree")->required();
  add_format(mirror_cmd);
  add_to(mirror_cmd);

  bool all_sites = false;
  auto* sites_cmd = app.add_subcommand("sites", "List lift sites (i,j)");
  sites_cmd->add_option("tree", tree_a, "Tree")->required();
  sites_cmd->add_flag("--lower", all_sites, "Also list lower sites");
  add_format(sites_cmd);

  auto* lift_cmd = app.add_subcommand("lift", "Apply a lift (right rotation)");
  auto* lower_cmd = app.add_subcommand("lower", "Apply a lower (left rotation)");
  for (auto* cmd : {lift_cmd, lower_cmd}) {
    cmd->add_option("tree", tree_a, "Tree")->required();
    cmd->add_option("-i", site_i, "Site start position")->required();
    cmd->add_option("-j", site_j, "Site end position")->required();
    add_format(cmd);
    add_to(cmd);
  }

  auto* path_cmd = app.add_subcommand("path", "Greedy rotation path");
  path_cmd->add_option("first", tree_a, "Source tree")->required();
  path_cmd->add_option("second", tree_b, "Target tree")->required();
  path_cmd->add_option("-o,--output", output, "Write JSON Lines path here");
  add_format(path_cmd);
  add_to(path_cmd);

  bool exact = false;
  bool force = false;
  std::optional<std::size_t> max_exact_n;
  auto* distance_cmd =
      app.add_subcommand("distance", "Greedy (and optionally exact) distance");
  distance_cmd->add_option("first", tree_a, "First tree")->required();
  distance_cmd->add_option("second", tree_b, "Second tree")->required();
  distance_cmd->add_flag("--exact", exact, "Also run the exact search");
  distance_cmd->add_option("--max-exact-n", max_exact_n,
                           "Leaf cap for the exact search");
  distance_cmd->add_flag("--force", force, "Ignore the exact-search cap");
  add_format(distance_cmd);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "All trees with n leaves");
  enumerate_cmd->add_option("-n,--leaves", leaves, "Leaf count")
      ->required()
      ->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember(kFormats));

  std::string dot_path;
  auto* hasse_cmd = app.add_subcommand("hasse", "Order diagram as DOT");
  hasse_cmd->add_option("-n,--leaves", leaves, "Leaf count")
      ->required()
      ->check(CLI::PositiveNumber);
  hasse_cmd->add_option("--dot", dot_path, "Write DOT here (default: stdout)");

  std::string path_file;
  std::string src_tree;
  std::string dst_tree;
  auto* verify_cmd = app.add_subcommand("verify", "Check a JSON Lines path");
  verify_cmd->add_option("path", path_file, "Path file")->required();
  verify_cmd->add_option("--src", src_tree, "Expected first tree")->required();
  verify_cmd->add_option("--dst", dst_tree, "Expected last tree")->required();
  add_format(verify_cmd);

  ReportOptions report_options;
  auto* report_cmd = app.add_subcommand("report", "Greedy vs exact report");
  report_cmd->add_option("--n-max", report_options.n_max, "Largest leaf count")
      ->required();
  report_cmd->add_option("--n-min", report_options.n_min, "Smallest leaf count");
  report_cmd->add_option("--exhaustive-max", report_options.exhaustive_max,
                         "Sweep all pairs up to this leaf count");
  report_cmd->add_option("--samples", report_options.samples,
                         "Random pairs per larger size");
  report_cmd->add_option("--seed", seed, "Seed for sampled sizes");
  report_cmd->add_option("--jobs", report_options.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  report_cmd->add_option("--list", report_options.max_listed,
                         "Counterexamples listed per size");
  report_cmd->add_option("-o,--output", output, "Write JSON here");

  auto* render_cmd = app.add_subcommand("render", "SVG / DOT figures");
  render_cmd->require_subcommand(1);
  std::vector<std::string> graph_trees;
  bool with_lift = false;
  auto* render_graph = render_cmd->add_subcommand("graph", "Stack graph overlay (SVG)");
  render_graph->add_option("trees", graph_trees, "Trees to overlay")->required();
  render_graph->add_flag("--common-lift", with_lift,
                         "Overlay the greedy common lift of two trees");
  render_graph->add_option("-o,--output", output, "SVG file");
  add_format(render_graph);
  auto* render_tree = render_cmd->add_subcommand("tree", "Tree drawing (DOT)");
  render_tree->add_option("tree", tree_a, "Tree")->required();
  render_tree->add_option("-o,--output", output, "DOT file");
  add_format(render_tree);
  auto* render_path = render_cmd->add_subcommand(
      "path", "Filmstrip of a greedy path or of a JSON Lines file (SVG)");
  render_path->add_option("first", tree_a, "Source tree");
  render_path->add_option("second", tree_b, "Target tree");
  render_path->add_option("--file", path_file, "Read the path from this file");
  render_path->add_option("-o,--output", output, "SVG file");
  add_format(render_path);
  auto* render_hasse = render_cmd->add_subcommand("hasse", "Order diagram (DOT)");
  render_hasse->add_option("-n,--leaves", leaves, "Leaf count")
      ->required()
      ->check(CLI::PositiveNumber);
  render_hasse->add_option("-o,--output", output, "DOT file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    const Caps caps = caps_from_environment();

    if (*random_cmd) {
      const auto used = effective_seed(seed);
      err << "seed: " << used << '\n';
      const auto g = random_stack_graph(leaves, used);
      out << print_tree_text(g, output_format(format, TextFormat::Bracket)) << '\n';
    } else if (*convert_cmd) {
      const TextFormat to = parse_text_format(to_format);
      std::string line;
      while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out << print_tree_text(read_tree(line, from_format).graph, to) << '\n';
      }
    } else if (*mirror_cmd) {
      const auto t = read_tree(tree_a, format);
      out << print_tree_text(mirror(t.graph), output_format(to_format, t.format))
          << '\n';
    } else if (*sites_cmd) {
      const auto t = read_tree(tree_a, format);
      for (const auto& s : lift_sites(t.graph)) out << "lift " << site_text(s) << '\n';
      if (all_sites) {
        for (const auto& s : lower_sites(t.graph)) {
          out << "lower " << site_text(s) << '\n';
        }
      }
    } else if (*lift_cmd || *lower_cmd) {
      const auto t = read_tree(tree_a, format);
      const LiftSite site{site_i, site_j};
      const auto r = *lift_cmd ? apply_lift(t.graph, site) : apply_lower(t.graph, site);
      out << print_tree_text(r, output_format(to_format, t.format)) << '\n';
    } else if (*path_cmd) {
      const auto a = read_tree(tree_a, format);
      const auto b = read_tree(tree_b, format);
      const auto path = find_rotation_path(a.graph, b.graph);
      const TextFormat f = output_format(to_format, a.format);
      for (std::size_t k = 0; k < path.graphs.size(); ++k) {
        if (k > 0) {
          const auto& step = path.steps[k - 1];
          out << "  " << to_string(step.direction) << ' ' << site_text(step.site)
              << '\n';
        }
        out << print_tree_text(path.graphs[k], f) << '\n';
      }
      out << "rotations: " << path.rotations() << '\n';
      if (!output.empty()) {
        std::ostringstream jsonl;
        write_path_jsonl(jsonl, path);
        write_file(output, jsonl.str());
      }
    } else if (*distance_cmd) {
      const auto a = read_tree(tree_a, format);
      const auto b = read_tree(tree_b, format);
      const auto greedy = greedy_estimate(a.graph, b.graph).rotations();
      std::optional<std::size_t> d;
      if (exact) {
        std::size_t cap = max_exact_n.value_or(caps.exact);
        if (force) cap = std::max(cap, a.graph.leaves());
        d = exact_distance(a.graph, b.graph, cap);
      }
      out << "greedy: " << greedy;
      if (d) out << ", exact: " << *d;
      out << '\n';
    } else if (*enumerate_cmd) {
      const TextFormat f = output_format(format, TextFormat::Bracket);
      for (const auto& g : enumerate_trees(leaves, caps.enumerate)) {
        out << print_tree_text(g, f) << '\n';
      }
    } else if (*hasse_cmd) {
      const auto d = order_diagram(leaves, caps.order);
      if (dot_path.empty()) {
        out << hasse_dot(d);
      } else {
        write_file(dot_path, hasse_dot(d));
        out << "nodes: " << d.nodes.size() << ", arrows: " << d.edges.size()
            << '\n';
      }
    } else if (*verify_cmd) {
      std::istringstream file(read_file(path_file));
      const auto path = read_path_jsonl(file);
      const auto src = read_tree(src_tree, format).graph;
      const auto dst = read_tree(dst_tree, format).graph;
      const auto report = verify_path(path, src, dst);
      out << "valid: " << (report.valid ? "true" : "false")
          << ", lifts: " << report.lifts << ", lowers: " << report.lowers
          << ", sorted: " << (report.sorted ? "true" : "false") << '\n';
      if (!report.valid) {
        err << "error: " << report.failure << '\n';
        return kExitDomainError;
      }
    } else if (*report_cmd) {
      report_options.cap = caps.order;
      if (report_options.n_max > report_options.exhaustive_max) {
        report_options.seed = effective_seed(seed);
        err << "seed: " << report_options.seed << '\n';
      } else if (seed) {
        report_options.seed = *seed;
      }
      const auto report = conjecture_report(report_options);
      const std::string json = to_json(report).dump(2) + "\n";
      if (output.empty()) {
        out << json;
      } else {
        write_file(output, json);
        out << to_text(report);
      }
      if (!report.requirements_hold()) {
        err << "error: greedy fell below the exact distance or its common lift "
               "is not an upper bound\n";
        return kExitDomainError;
      }
    } else if (*render_graph) {
      std::vector<StyledGraph> styled;
      const char* palette[] = {kFirstColor, kSecondColor, "#9467bd", "#8c564b",
                               "#e377c2", "#7f7f7f"};
      for (std::size_t k = 0; k < graph_trees.size(); ++k) {
        const auto t = read_tree(graph_trees[k], format);
        styled.push_back({t.graph, graph_trees[k], palette[k % 6]});
      }
      if (with_lift) {
        if (styled.size() != 2) {
          throw Error(Errc::BadLength, "--common-lift needs exactly two trees");
        }
        const auto cl = greedy_common_lift(styled[0].graph, styled[1].graph);
        styled.push_back({cl.common_lift, "common lift", kLiftColor});
      }
      emit(out, output, stack_graph_svg(styled));
    } else if (*render_tree) {
      emit(out, output, tree_dot(read_tree(tree_a, format).graph));
    } else if (*render_path) {
      RotationPath path;
      if (!path_file.empty()) {
        std::istringstream file(read_file(path_file));
        path = read_path_jsonl(file);
      } else if (!tree_a.empty() && !tree_b.empty()) {
        path = find_rotation_path(read_tree(tree_a, format).graph,
                                  read_tree(tree_b, format).graph);
      } else {
        err << "render path: give two trees or --file\n";
        return kExitUsage;
      }
      emit(out, output, path_filmstrip(path));
    } else if (*render_hasse) {
      emit(out, output, hasse_dot(order_diagram(leaves, caps.order)));
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace rotpath
