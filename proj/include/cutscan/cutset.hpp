#ifndef CUTSCAN_CUTSET_HPP
#define CUTSCAN_CUTSET_HPP

#include <vector>

#include "cutscan/bfs_ordering.hpp"
#include "cutscan/graph.hpp"

namespace cutscan {

/// A minimal cutset as a canonical bipartition: both sides induce connected
/// subgraphs and crossing_edges is exactly the edge set between them.
/// side_s is the side containing the enumeration seed (vertex 0 for the
/// seedless brute-force scan).
struct Cutset {
  std::vector<Vertex> side_s;          // sorted
  std::vector<Vertex> side_t;          // sorted complement
  std::vector<Edge> crossing_edges;    // sorted, u < v

  bool operator==(const Cutset&) const = default;
};

/// Builds the cutset for a given seed side: fills the complement and the
/// crossing edges. Does not check connectivity of the sides.
Cutset make_cutset(const Graph& g, std::span<const Vertex> side_s_sorted);

/// True iff the bipartition ⟨side_s, side_t⟩ satisfies every Cutset
/// invariant on g (both sides non-empty and connected, crossing exact).
bool cutset_valid(const Graph& g, const Cutset& c);

/// Reconstructs the bipartition cut by a crossing-edge set: deleting those
/// edges must leave exactly two connected components (throws DataError
/// otherwise). side_s is the side containing the smallest vertex id. This
/// lifts a segment's cutset to the whole graph.
Cutset cutset_from_crossing(const Graph& g, std::span<const Edge> crossing);

/// Recursion state of the contraction scan: the absorbed set F (always
/// containing the seed and inducing a connected subgraph), its open
/// neighborhood, and the BFS rank of the last vertex contracted.
struct ContractionState {
  std::vector<Vertex> absorbed;   // sorted
  std::vector<Vertex> frontier;   // sorted, disjoint from absorbed
  int pivot_rank = 0;             // max BFS rank over absorbed
};

/// Builds a ContractionState from an absorbed set, validating that it
/// contains the ordering's seed and induces a connected subgraph.
ContractionState make_contraction_state(const Graph& g,
                                        const BfsOrdering& order,
                                        std::vector<Vertex> absorbed);

}  // namespace cutscan

#endif  // CUTSCAN_CUTSET_HPP
