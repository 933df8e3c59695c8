// cutscan: minimal cutset enumeration toolkit.
//
// Subcommands: enumerate, segments, count-skipped, randgen, bench,
// seed-sensitivity. Graphs travel in the shared edge-list format
// ("p <n> <m>" header plus one "u v" line per edge, '#' comments).
// Exit codes: 0 success, 1 usage error, 2 data error, 3 cap refusal.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "cutscan/bench.hpp"
#include "cutscan/enhanced.hpp"
#include "cutscan/enumerate.hpp"
#include "cutscan/generator.hpp"
#include "cutscan/graph.hpp"
#include "cutscan/segments.hpp"

using nlohmann::json;
using namespace cutscan;

namespace {

int default_brute_cap() {
  if (const char* env = std::getenv("CUTSCAN_BRUTE_CAP")) {
    try {
      return std::stoi(env);
    } catch (...) {
      throw CLI::ValidationError("CUTSCAN_BRUTE_CAP",
                                 "must be an integer, got: " + std::string(env));
    }
  }
  return kDefaultBruteCap;
}

// Graph input shared by the graph-consuming subcommands: a file or an
// inline generator spec.
struct GraphInput {
  std::string path;
  int gen_n = 0;
  double gen_degree = 0.0;
  std::uint64_t gen_seed = 0;
  bool gen_monolithic = true;

  void attach(CLI::App* cmd) {
    auto* input = cmd->add_option("-i,--input", path, "graph file (edge list)");
    auto* gen_n_opt =
        cmd->add_option("--gen-n", gen_n, "generate: vertex count");
    auto* gen_deg_opt = cmd->add_option("--gen-degree", gen_degree,
                                        "generate: average degree");
    cmd->add_option("--gen-seed", gen_seed, "generate: rng seed");
    cmd->add_flag("--gen-monolithic,!--gen-no-monolithic", gen_monolithic,
                  "generate: require a graph with no interior vertex");
    input->excludes(gen_n_opt);
    gen_n_opt->needs(gen_deg_opt);
    cmd->callback([this, input, gen_n_opt] {
      if (!*input && !*gen_n_opt) {
        throw CLI::RequiredError("--input or --gen-n");
      }
    });
  }

  Graph load() const {
    if (!path.empty()) return load_graph_file(path);
    return random_graph(GenSpec{gen_n, gen_degree, gen_seed, gen_monolithic,
                                10000});
  }
};

std::string edge_token(const Edge& e) {
  return std::to_string(e.first) + "-" + std::to_string(e.second);
}

void print_cutset_plain(std::ostream& out, const Cutset& c) {
  out << '{';
  for (size_t i = 0; i < c.side_s.size(); ++i) {
    if (i) out << ' ';
    out << c.side_s[i];
  }
  out << "} |";
  for (const Edge& e : c.crossing_edges) out << ' ' << edge_token(e);
  out << '\n';
}

void print_cutset_json(std::ostream& out, const Cutset& c) {
  json line;
  line["side_s"] = c.side_s;
  line["side_t"] = c.side_t;
  json crossing = json::array();
  for (const Edge& e : c.crossing_edges) {
    crossing.push_back(json::array({e.first, e.second}));
  }
  line["crossing"] = crossing;
  out << line.dump() << '\n';
}

void print_cutset_csv(std::ostream& out, std::uint64_t index, const Cutset& c) {
  out << index << ',';
  for (size_t i = 0; i < c.side_s.size(); ++i) {
    if (i) out << ' ';
    out << c.side_s[i];
  }
  out << ',';
  for (size_t i = 0; i < c.crossing_edges.size(); ++i) {
    if (i) out << ' ';
    out << edge_token(c.crossing_edges[i]);
  }
  out << '\n';
}

void print_summary(std::ostream& out, const std::string& format,
                   const EnumerationReport& report) {
  if (format == "json") {
    json summary;
    summary["cutsets"] = report.cutset_count;
    summary["iterations"] = report.iterations;
    summary["connectivity_checks"] = report.connectivity_checks;
    summary["duplicates_detected"] = report.duplicates_detected;
    summary["pruned_subtrees"] = report.pruned_subtrees;
    summary["cut_through_states"] = report.cut_through_states;
    summary["wall_time_ms"] = report.wall_time_ms;
    out << json{{"summary", summary}}.dump() << '\n';
  } else {
    out << "cutsets=" << report.cutset_count << " iterations="
        << report.iterations << " connectivity_checks="
        << report.connectivity_checks << " duplicates_detected="
        << report.duplicates_detected << " pruned_subtrees="
        << report.pruned_subtrees << " cut_through_states="
        << report.cut_through_states << " wall_time_ms="
        << report.wall_time_ms << '\n';
  }
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "brute") return Algorithm::brute;
  if (name == "recursive") return Algorithm::recursive;
  return Algorithm::enhanced;
}

struct EnumerateArgs {
  GraphInput input;
  std::string algorithm = "enhanced";
  std::optional<Vertex> seed;
  std::string format = "plain";
  int brute_cap = kDefaultBruteCap;
};

int run_enumerate(const EnumerateArgs& args) {
  Graph g = args.input.load();
  Vertex seed = args.seed.value_or(min_degree_vertex(g));
  std::uint64_t index = 0;
  CutsetSink sink = [&](const Cutset& c) {
    if (args.format == "json") {
      print_cutset_json(std::cout, c);
    } else if (args.format == "csv") {
      print_cutset_csv(std::cout, index, c);
    } else {
      print_cutset_plain(std::cout, c);
    }
    ++index;
  };
  if (args.format == "csv") std::cout << "index,side_s,crossing\n";

  EnumerationReport report;
  switch (parse_algorithm(args.algorithm)) {
    case Algorithm::brute:
      report = enumerate_brute(g, sink, args.brute_cap);
      break;
    case Algorithm::recursive:
      report = enumerate_recursive(g, seed, sink);
      break;
    case Algorithm::enhanced:
      report = enumerate_enhanced(g, seed, sink);
      break;
  }
  print_summary(std::cout, args.format, report);
  return 0;
}

struct SegmentsArgs {
  GraphInput input;
  bool enumerate = false;
  std::string algorithm = "enhanced";
  std::string format = "plain";
};

int run_segments(const SegmentsArgs& args) {
  Graph g = args.input.load();
  auto segments = decompose_segments(g);

  for (size_t i = 0; i < segments.size(); ++i) {
    const Segment& seg = segments[i];
    if (args.format == "json") {
      json line;
      line["segment"] = i;
      line["vertices"] = seg.vertices;
      json edges = json::array();
      for (const Edge& e : seg.edges) {
        edges.push_back(json::array({e.first, e.second}));
      }
      line["edges"] = edges;
      std::cout << line.dump() << '\n';
    } else {
      std::cout << "segment " << i << ": vertices";
      for (Vertex v : seg.vertices) std::cout << ' ' << v;
      std::cout << " | edges";
      for (const Edge& e : seg.edges) std::cout << ' ' << edge_token(e);
      std::cout << '\n';
    }
  }

  std::uint64_t union_count = 0;
  if (args.enumerate) {
    // Per-segment cutsets, lifted back to bipartitions of the whole graph.
    for (const Segment& seg : segments) {
      if (seg.edges.empty()) continue;
      auto [sub, to_global] = induce(g, seg.vertices);
      CutsetSink lift = [&](const Cutset& local) {
        std::vector<Edge> crossing;
        for (const Edge& e : local.crossing_edges) {
          Vertex u = to_global[e.first], v = to_global[e.second];
          crossing.emplace_back(std::min(u, v), std::max(u, v));
        }
        Cutset lifted = cutset_from_crossing(g, crossing);
        if (args.format == "json") {
          print_cutset_json(std::cout, lifted);
        } else if (args.format == "csv") {
          print_cutset_csv(std::cout, union_count, lifted);
        } else {
          print_cutset_plain(std::cout, lifted);
        }
        ++union_count;
      };
      Vertex seg_seed = min_degree_vertex(sub);
      if (parse_algorithm(args.algorithm) == Algorithm::recursive) {
        enumerate_recursive(sub, seg_seed, lift);
      } else {
        enumerate_enhanced(sub, seg_seed, lift);
      }
    }
  }

  if (args.format == "json") {
    json summary;
    summary["segments"] = segments.size();
    if (args.enumerate) summary["union_cutsets"] = union_count;
    std::cout << json{{"summary", summary}}.dump() << '\n';
  } else {
    std::cout << "segments=" << segments.size();
    if (args.enumerate) std::cout << " union_cutsets=" << union_count;
    std::cout << '\n';
  }
  return 0;
}

struct CountSkippedArgs {
  GraphInput input;
  std::optional<Vertex> seed;
  std::string mode = "current";
  int brute_cap = kDefaultBruteCap;
  std::string format = "plain";
};

int run_count_skipped(const CountSkippedArgs& args) {
  Graph g = args.input.load();
  Vertex seed = args.seed.value_or(min_degree_vertex(g));
  SkipMode mode = args.mode == "literal" ? SkipMode::literal : SkipMode::current;
  SkippedStateCount estimate = count_skipped(g, seed, mode);
  std::optional<std::string> brute;
  if (g.vertex_count() <= args.brute_cap) {
    brute = count_skipped_brute(g, seed, args.brute_cap).to_string();
  }
  if (args.format == "json") {
    json line;
    line["estimate"] = estimate.total.to_string();
    line["mode"] = args.mode;
    if (brute) line["brute"] = *brute;
    std::cout << line.dump() << '\n';
  } else {
    std::cout << "estimate=" << estimate.total.to_string()
              << " mode=" << args.mode;
    if (brute) std::cout << " brute=" << *brute;
    std::cout << '\n';
  }
  return 0;
}

struct RandgenArgs {
  GenSpec spec;
  std::string out_path;
};

int run_randgen(const RandgenArgs& args) {
  Graph g = random_graph(args.spec);
  std::ofstream out(args.out_path);
  if (!out) throw DataError("cannot write " + args.out_path);
  save_graph(g, out, describe(args.spec));
  return 0;
}

struct BenchArgs {
  std::string mode = "size";
  int n = 20;
  std::vector<double> degrees;
  std::vector<int> sizes;
  double degree = 3.0;
  int trials = 10;
  std::uint64_t rng_seed = 1;
  bool efficiency = false;
  std::string out_path;
};

int run_bench(const BenchArgs& args) {
  std::vector<BenchRow> rows;
  if (args.mode == "degree") {
    if (args.degrees.empty()) {
      throw CLI::RequiredError("--degrees (with --mode degree)");
    }
    rows = sweep_degree(args.n, args.degrees, args.trials, args.rng_seed);
  } else {
    if (args.sizes.empty()) {
      throw CLI::RequiredError("--sizes (with --mode size)");
    }
    rows = sweep_size(args.sizes, args.degree, args.trials, args.rng_seed);
  }

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!args.out_path.empty()) {
    file.open(args.out_path);
    if (!file) throw DataError("cannot write " + args.out_path);
    out = &file;
  }
  if (args.efficiency) {
    auto table = efficiency_table(rows);
    if (table.empty()) std::cerr << "warning: no rows to aggregate\n";
    write_efficiency_csv(table, *out);
  } else {
    write_csv(rows, *out);
  }
  return 0;
}

struct SeedSensitivityArgs {
  GraphInput input;
  bool no_brute = false;
  int brute_cap = kDefaultBruteCap;
  std::string out_path;
};

int run_seed_sensitivity(const SeedSensitivityArgs& args) {
  Graph g = args.input.load();
  auto rows = seed_sensitivity(g, !args.no_brute, args.brute_cap);
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!args.out_path.empty()) {
    file.open(args.out_path);
    if (!file) throw DataError("cannot write " + args.out_path);
    out = &file;
  }
  write_csv(rows, *out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal cutset enumeration toolkit"};
  app.require_subcommand(1);

  int env_cap;
  try {
    env_cap = default_brute_cap();
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }

  EnumerateArgs enumerate_args;
  enumerate_args.brute_cap = env_cap;
  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "list all minimal cutsets");
  enumerate_args.input.attach(enumerate_cmd);
  enumerate_cmd->add_option("-a,--algorithm", enumerate_args.algorithm,
                            "brute | recursive | enhanced")
      ->check(CLI::IsMember({"brute", "recursive", "enhanced"}))
      ->capture_default_str();
  enumerate_cmd
      ->add_option("-s,--seed", enumerate_args.seed,
                   "seed vertex (default: min-degree vertex)")
      ->check(CLI::NonNegativeNumber);
  enumerate_cmd->add_option("-f,--format", enumerate_args.format,
                            "plain | json | csv")
      ->check(CLI::IsMember({"plain", "json", "csv"}))
      ->capture_default_str();
  enumerate_cmd->add_option("--brute-cap", enumerate_args.brute_cap,
                            "size cap for the brute-force oracle")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  SegmentsArgs segments_args;
  auto* segments_cmd = app.add_subcommand(
      "segments", "decompose into elementary segments");
  segments_args.input.attach(segments_cmd);
  segments_cmd->add_flag("-e,--enumerate", segments_args.enumerate,
                         "enumerate per segment and emit the union");
  segments_cmd->add_option("-a,--algorithm", segments_args.algorithm,
                           "recursive | enhanced (per segment)")
      ->check(CLI::IsMember({"recursive", "enhanced"}))
      ->capture_default_str();
  segments_cmd->add_option("-f,--format", segments_args.format,
                           "plain | json | csv")
      ->check(CLI::IsMember({"plain", "json", "csv"}))
      ->capture_default_str();

  CountSkippedArgs skipped_args;
  skipped_args.brute_cap = env_cap;
  auto* skipped_cmd = app.add_subcommand(
      "count-skipped", "estimate skipped disconnected subsets");
  skipped_args.input.attach(skipped_cmd);
  skipped_cmd->add_option("-s,--seed", skipped_args.seed,
                          "seed vertex (default: min-degree vertex)");
  skipped_cmd->add_option("-m,--mode", skipped_args.mode, "literal | current")
      ->check(CLI::IsMember({"literal", "current"}))
      ->capture_default_str();
  skipped_cmd->add_option("--brute-cap", skipped_args.brute_cap,
                          "disable the exhaustive cross-check above this size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  skipped_cmd->add_option("-f,--format", skipped_args.format, "plain | json")
      ->check(CLI::IsMember({"plain", "json"}))
      ->capture_default_str();

  RandgenArgs randgen_args;
  auto* randgen_cmd =
      app.add_subcommand("randgen", "write a seeded random graph file");
  randgen_cmd->add_option("-n,--n", randgen_args.spec.n, "vertex count")
      ->required();
  randgen_cmd->add_option("-d,--degree", randgen_args.spec.avg_degree,
                          "average degree")
      ->required();
  randgen_cmd->add_option("-s,--rng-seed", randgen_args.spec.rng_seed,
                          "generator seed")
      ->capture_default_str();
  randgen_cmd->add_flag("--monolithic,!--no-monolithic",
                        randgen_args.spec.require_monolithic,
                        "require a graph with no interior vertex");
  randgen_cmd->add_option("--max-retries", randgen_args.spec.max_retries,
                          "resampling budget")
      ->capture_default_str();
  randgen_cmd->add_option("-o,--out", randgen_args.out_path, "output file")
      ->required();

  BenchArgs bench_args;
  auto* bench_cmd =
      app.add_subcommand("bench", "run a sweep and emit CSV rows");
  bench_cmd->add_option("-m,--mode", bench_args.mode, "degree | size")
      ->check(CLI::IsMember({"degree", "size"}))
      ->capture_default_str();
  bench_cmd->add_option("-n,--n", bench_args.n,
                        "network size (degree mode)")
      ->capture_default_str();
  bench_cmd->add_option("--degrees", bench_args.degrees,
                        "degree grid (degree mode)")
      ->delimiter(',');
  bench_cmd->add_option("--sizes", bench_args.sizes, "size grid (size mode)")
      ->delimiter(',');
  bench_cmd->add_option("-d,--degree", bench_args.degree,
                        "average degree (size mode)")
      ->capture_default_str();
  bench_cmd->add_option("-t,--trials", bench_args.trials,
                        "graphs per grid point")
      ->capture_default_str();
  bench_cmd->add_option("-r,--rng-seed", bench_args.rng_seed, "sweep seed")
      ->capture_default_str();
  bench_cmd->add_flag("--efficiency", bench_args.efficiency,
                      "emit the aggregated efficiency table instead of rows");
  bench_cmd->add_option("-o,--out", bench_args.out_path,
                        "output file (default: stdout)");

  SeedSensitivityArgs seed_args;
  seed_args.brute_cap = env_cap;
  auto* seed_cmd = app.add_subcommand(
      "seed-sensitivity", "per-seed iteration comparison on one graph");
  seed_args.input.attach(seed_cmd);
  seed_cmd->add_flag("--no-brute", seed_args.no_brute,
                     "skip the brute-force rows");
  seed_cmd->add_option("--brute-cap", seed_args.brute_cap,
                       "size cap for the brute-force rows")
      ->capture_default_str();
  seed_cmd->add_option("-o,--out", seed_args.out_path,
                       "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*enumerate_cmd) return run_enumerate(enumerate_args);
    if (*segments_cmd) return run_segments(segments_args);
    if (*skipped_cmd) return run_count_skipped(skipped_args);
    if (*randgen_cmd) return run_randgen(randgen_args);
    if (*bench_cmd) return run_bench(bench_args);
    if (*seed_cmd) return run_seed_sensitivity(seed_args);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const CapError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
