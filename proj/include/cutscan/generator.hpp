#ifndef CUTSCAN_GENERATOR_HPP
#define CUTSCAN_GENERATOR_HPP

#include <cstdint>
#include <string>

#include "cutscan/graph.hpp"

namespace cutscan {

/// Parameters for the seeded random-graph generator.
///
/// The model: a uniform simple graph with exactly
/// m = round(n * avg_degree / 2) edges (ties rounded half-up), resampled
/// until connected and, when required, until it has no interior vertex.
/// The generator is std::mt19937_64 with an unbiased rejection bounded
/// draw, so identical specs produce bit-identical graphs on every platform.
struct GenSpec {
  int n = 0;
  double avg_degree = 0.0;
  std::uint64_t rng_seed = 0;
  bool require_monolithic = true;
  int max_retries = 10000;
};

/// Edge count implied by a spec: round(n * avg_degree / 2), half-up.
int edge_count_for(int n, double avg_degree);

/// Generates the graph for a spec. Throws DataError when the spec is
/// infeasible (edge count below the spanning-tree bound or above the
/// simple-graph bound, monolithic with m < n) or when max_retries
/// resamples never satisfy the constraints.
Graph random_graph(const GenSpec& spec);

/// One-line description of a spec, used as the file header comment.
std::string describe(const GenSpec& spec);

}  // namespace cutscan

#endif  // CUTSCAN_GENERATOR_HPP
