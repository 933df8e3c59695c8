#ifndef CUTSCAN_BFS_ORDERING_HPP
#define CUTSCAN_BFS_ORDERING_HPP

#include <vector>

#include "cutscan/graph.hpp"

namespace cutscan {

/// Total order on the vertices of a connected graph, rooted at a seed.
///
/// Rank equals the position in lexicographic (BFS depth, vertex id) order:
/// the seed has rank 0, every level is visited in ascending vertex id, and
/// every non-seed vertex has a neighbor with strictly smaller rank.
struct BfsOrdering {
  Vertex seed = 0;
  std::vector<int> order_of;         // order_of[v] = rank of v, in [0, n)
  std::vector<Vertex> visit_sequence;  // inverse permutation
};

/// Deterministic BFS ordering from `seed`. Throws DataError if the graph
/// is disconnected (enumeration requires connectivity).
BfsOrdering bfs_order(const Graph& g, Vertex seed);

}  // namespace cutscan

#endif  // CUTSCAN_BFS_ORDERING_HPP
