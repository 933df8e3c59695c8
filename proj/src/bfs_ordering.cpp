#include "cutscan/bfs_ordering.hpp"

#include <algorithm>

namespace cutscan {

BfsOrdering bfs_order(const Graph& g, Vertex seed) {
  int n = g.vertex_count();
  if (seed < 0 || seed >= n) throw DataError("bfs_order: seed out of range");

  std::vector<int> dist(n, -1);
  std::vector<Vertex> queue;
  queue.reserve(n);
  queue.push_back(seed);
  dist[seed] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == -1) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  if (static_cast<int>(queue.size()) != n) {
    throw DataError("bfs_order: graph is disconnected");
  }

  BfsOrdering order;
  order.seed = seed;
  order.visit_sequence.resize(n);
  for (Vertex v = 0; v < n; ++v) order.visit_sequence[v] = v;
  std::sort(order.visit_sequence.begin(), order.visit_sequence.end(),
            [&](Vertex a, Vertex b) {
              return dist[a] != dist[b] ? dist[a] < dist[b] : a < b;
            });
  order.order_of.resize(n);
  for (int rank = 0; rank < n; ++rank) order.order_of[order.visit_sequence[rank]] = rank;
  return order;
}

}  // namespace cutscan
