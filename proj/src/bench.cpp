#include "cutscan/bench.hpp"

#include <bit>
#include <cstdio>
#include <map>
#include <ostream>
#include <tuple>

#include "cutscan/enhanced.hpp"
#include "cutscan/generator.hpp"

namespace cutscan {

const char* to_string(Algorithm alg) {
  switch (alg) {
    case Algorithm::brute: return "brute";
    case Algorithm::recursive: return "recursive";
    case Algorithm::enhanced: return "enhanced";
  }
  return "?";
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t rng_seed, int n, double degree,
                         int trial) {
  std::uint64_t h = splitmix64(rng_seed);
  h = splitmix64(h ^ static_cast<std::uint64_t>(n));
  h = splitmix64(h ^ std::bit_cast<std::uint64_t>(degree));
  h = splitmix64(h ^ static_cast<std::uint64_t>(trial));
  return h;
}

EnumerationReport run_algorithm(const Graph& g, Algorithm alg, Vertex seed,
                                int brute_cap) {
  CutsetSink discard = [](const Cutset&) {};
  switch (alg) {
    case Algorithm::brute: return enumerate_brute(g, discard, brute_cap);
    case Algorithm::recursive: return enumerate_recursive(g, seed, discard);
    case Algorithm::enhanced: return enumerate_enhanced(g, seed, discard);
  }
  throw DataError("unknown algorithm");
}

BenchRow make_row(const Graph& g, Algorithm alg, Vertex seed,
                  std::string seed_policy, double avg_degree, int trial,
                  int brute_cap) {
  EnumerationReport report = run_algorithm(g, alg, seed, brute_cap);
  BenchRow row;
  row.n = g.vertex_count();
  row.avg_degree = avg_degree;
  row.trial = trial;
  row.algorithm = alg;
  row.seed_policy = std::move(seed_policy);
  row.iterations = report.iterations;
  row.cutsets = report.cutset_count;
  row.efficiency_factor =
      report.cutset_count == 0
          ? 0.0
          : static_cast<double>(report.iterations) / report.cutset_count;
  row.wall_time_ms = report.wall_time_ms;
  return row;
}

std::vector<BenchRow> sweep_point(int n, double degree, int trials,
                                  std::uint64_t rng_seed) {
  std::vector<BenchRow> rows;
  for (int trial = 0; trial < trials; ++trial) {
    GenSpec spec;
    spec.n = n;
    spec.avg_degree = degree;
    spec.rng_seed = trial_seed(rng_seed, n, degree, trial);
    spec.require_monolithic = true;
    Graph g = [&] {
      try {
        return random_graph(spec);
      } catch (const DataError& e) {
        throw DataError("sweep point n=" + std::to_string(n) + " degree=" +
                        std::to_string(degree) + " trial=" +
                        std::to_string(trial) + ": " + e.what());
      }
    }();
    Vertex seed = min_degree_vertex(g);
    for (Algorithm alg : {Algorithm::recursive, Algorithm::enhanced}) {
      rows.push_back(make_row(g, alg, seed, "min-degree", degree, trial, 0));
    }
  }
  return rows;
}

}  // namespace

std::vector<BenchRow> sweep_degree(int n, std::span<const double> degrees,
                                   int trials, std::uint64_t rng_seed) {
  std::vector<BenchRow> rows;
  for (double degree : degrees) {
    auto point = sweep_point(n, degree, trials, rng_seed);
    rows.insert(rows.end(), point.begin(), point.end());
  }
  return rows;
}

std::vector<BenchRow> sweep_size(std::span<const int> sizes, double avg_degree,
                                 int trials, std::uint64_t rng_seed) {
  std::vector<BenchRow> rows;
  for (int n : sizes) {
    auto point = sweep_point(n, avg_degree, trials, rng_seed);
    rows.insert(rows.end(), point.begin(), point.end());
  }
  return rows;
}

std::vector<BenchRow> seed_sensitivity(const Graph& g, bool include_brute,
                                       int brute_cap) {
  std::vector<BenchRow> rows;
  int n = g.vertex_count();
  double degree = n == 0 ? 0.0 : 2.0 * g.edge_count() / n;
  for (Vertex seed = 0; seed < n; ++seed) {
    if (include_brute) {
      rows.push_back(make_row(g, Algorithm::brute, seed,
                              std::to_string(seed), degree, 0, brute_cap));
    }
    rows.push_back(make_row(g, Algorithm::recursive, seed,
                            std::to_string(seed), degree, 0, 0));
    rows.push_back(make_row(g, Algorithm::enhanced, seed,
                            std::to_string(seed), degree, 0, 0));
  }
  return rows;
}

std::vector<EfficiencyEntry> efficiency_table(std::span<const BenchRow> rows) {
  struct Acc {
    double iterations = 0.0;
    double cutsets = 0.0;
    int count = 0;
  };
  std::map<std::tuple<int, double, int>, Acc> groups;
  for (const BenchRow& row : rows) {
    auto& acc = groups[{row.n, row.avg_degree, static_cast<int>(row.algorithm)}];
    acc.iterations += static_cast<double>(row.iterations);
    acc.cutsets += static_cast<double>(row.cutsets);
    ++acc.count;
  }
  std::vector<EfficiencyEntry> table;
  for (const auto& [key, acc] : groups) {
    EfficiencyEntry entry;
    entry.n = std::get<0>(key);
    entry.avg_degree = std::get<1>(key);
    entry.algorithm = static_cast<Algorithm>(std::get<2>(key));
    entry.mean_iterations = acc.iterations / acc.count;
    entry.mean_cutsets = acc.cutsets / acc.count;
    entry.efficiency_factor =
        entry.mean_cutsets == 0.0 ? 0.0
                                  : entry.mean_iterations / entry.mean_cutsets;
    table.push_back(entry);
  }
  return table;
}

namespace {

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

}  // namespace

void write_csv(std::span<const BenchRow> rows, std::ostream& out) {
  out << "n,avg_degree,trial,algorithm,seed_policy,iterations,cutsets,"
         "efficiency_factor,wall_time_ms\n";
  for (const BenchRow& row : rows) {
    out << row.n << ',' << format_double(row.avg_degree) << ',' << row.trial
        << ',' << to_string(row.algorithm) << ',' << row.seed_policy << ','
        << row.iterations << ',' << row.cutsets << ','
        << format_double(row.efficiency_factor) << ','
        << format_double(row.wall_time_ms) << '\n';
  }
}

void write_efficiency_csv(std::span<const EfficiencyEntry> entries,
                          std::ostream& out) {
  out << "n,avg_degree,algorithm,mean_iterations,mean_cutsets,"
         "efficiency_factor\n";
  for (const EfficiencyEntry& entry : entries) {
    out << entry.n << ',' << format_double(entry.avg_degree) << ','
        << to_string(entry.algorithm) << ','
        << format_double(entry.mean_iterations) << ','
        << format_double(entry.mean_cutsets) << ','
        << format_double(entry.efficiency_factor) << '\n';
  }
}

}  // namespace cutscan
