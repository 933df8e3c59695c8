#include "cutscan/generator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <unordered_set>

namespace cutscan {

namespace {

// Unbiased bounded draw by rejection. std::uniform_int_distribution is
// implementation-defined, which would break the reproducibility contract.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

// k-th unordered pair in lexicographic order over [0, n).
Edge decode_pair(int n, std::uint64_t k) {
  Vertex u = 0;
  std::uint64_t row = static_cast<std::uint64_t>(n - 1);
  while (k >= row) {
    k -= row;
    ++u;
    --row;
  }
  return {u, u + 1 + static_cast<Vertex>(k)};
}

}  // namespace

int edge_count_for(int n, double avg_degree) {
  return static_cast<int>(std::floor(n * avg_degree / 2.0 + 0.5));
}

Graph random_graph(const GenSpec& spec) {
  int n = spec.n;
  if (n < 2) throw DataError("random_graph: need at least 2 vertices");
  long long total_pairs = static_cast<long long>(n) * (n - 1) / 2;
  int m = edge_count_for(n, spec.avg_degree);
  if (m < n - 1) {
    throw DataError("random_graph: m=" + std::to_string(m) + " < n-1=" +
                    std::to_string(n - 1) + ", below the spanning-tree bound");
  }
  if (m > total_pairs) {
    throw DataError("random_graph: m=" + std::to_string(m) +
                    " exceeds the simple-graph bound " +
                    std::to_string(total_pairs));
  }
  bool k2 = n == 2 && m == 1;  // the single edge is monolithic by convention
  if (spec.require_monolithic && m < n && !k2) {
    throw DataError("random_graph: m=" + std::to_string(m) + " < n=" +
                    std::to_string(n) + ", cannot be monolithic");
  }

  std::mt19937_64 rng(spec.rng_seed);
  for (int attempt = 0; attempt < spec.max_retries; ++attempt) {
    // Floyd's sampling of m distinct pair indices.
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(m * 2);
    for (std::uint64_t j = total_pairs - m; j < static_cast<std::uint64_t>(total_pairs); ++j) {
      std::uint64_t t = bounded(rng, j + 1);
      if (!chosen.insert(t).second) chosen.insert(j);
    }
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::uint64_t k : chosen) edges.push_back(decode_pair(n, k));
    Graph g = Graph::from_edges(n, std::move(edges));
    if (!is_connected(g)) continue;
    if (spec.require_monolithic && n > 2 && !interior_vertices(g).empty()) continue;
    return g;
  }
  throw DataError("random_graph: no graph satisfied the constraints after " +
                  std::to_string(spec.max_retries) + " attempts (n=" +
                  std::to_string(n) + ", m=" + std::to_string(m) + ")");
}

std::string describe(const GenSpec& spec) {
  std::ostringstream out;
  out << "random_graph n=" << spec.n << " avg_degree=" << spec.avg_degree
      << " rng_seed=" << spec.rng_seed << " monolithic="
      << (spec.require_monolithic ? 1 : 0) << " m="
      << edge_count_for(spec.n, spec.avg_degree) << " engine=mt19937_64";
  return out.str();
}

}  // namespace cutscan
