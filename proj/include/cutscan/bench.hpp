#ifndef CUTSCAN_BENCH_HPP
#define CUTSCAN_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cutscan/enumerate.hpp"
#include "cutscan/graph.hpp"

namespace cutscan {

enum class Algorithm { brute, recursive, enhanced };

const char* to_string(Algorithm alg);

/// One enumeration run of one algorithm on one generated (or given) graph.
struct BenchRow {
  int n = 0;
  double avg_degree = 0.0;
  int trial = 0;
  Algorithm algorithm = Algorithm::recursive;
  std::string seed_policy;  // "min-degree" or the seed vertex id
  std::uint64_t iterations = 0;
  std::uint64_t cutsets = 0;
  double efficiency_factor = 0.0;  // iterations / cutsets
  double wall_time_ms = 0.0;
};

/// Runs recursive and enhanced enumeration over `trials` random monolithic
/// graphs per degree, seeding each enumeration at the min-degree vertex.
/// Trial seeds derive from (rng_seed, n, degree, trial), so rows are
/// deterministic and schedule-independent.
std::vector<BenchRow> sweep_degree(int n, std::span<const double> degrees,
                                   int trials, std::uint64_t rng_seed);

/// Same sweep with the roles of size and degree exchanged.
std::vector<BenchRow> sweep_size(std::span<const int> sizes, double avg_degree,
                                 int trials, std::uint64_t rng_seed);

/// One row per (seed vertex, algorithm) on a fixed graph. Brute-force rows
/// are included only when requested (the run is refused above the cap).
std::vector<BenchRow> seed_sensitivity(const Graph& g, bool include_brute,
                                       int brute_cap = kDefaultBruteCap);

/// Group means keyed by (n, avg_degree, algorithm); the efficiency factor
/// is the ratio of means (mean iterations / mean cutsets).
struct EfficiencyEntry {
  int n = 0;
  double avg_degree = 0.0;
  Algorithm algorithm = Algorithm::recursive;
  double mean_iterations = 0.0;
  double mean_cutsets = 0.0;
  double efficiency_factor = 0.0;
};

std::vector<EfficiencyEntry> efficiency_table(std::span<const BenchRow> rows);

/// CSV with header n,avg_degree,trial,algorithm,seed_policy,iterations,
/// cutsets,efficiency_factor,wall_time_ms; floats with 6 significant
/// digits; LF line endings.
void write_csv(std::span<const BenchRow> rows, std::ostream& out);

/// CSV for the aggregated table: n,avg_degree,algorithm,mean_iterations,
/// mean_cutsets,efficiency_factor.
void write_efficiency_csv(std::span<const EfficiencyEntry> entries,
                          std::ostream& out);

}  // namespace cutscan

#endif  // CUTSCAN_BENCH_HPP
