#ifndef CUTSCAN_TEST_UTIL_HPP
#define CUTSCAN_TEST_UTIL_HPP

// Fixture graphs and independent oracles. The oracles are deliberately
// written against the raw edge list (not the library's traversal helpers)
// so they stay independent of the implementation paths they check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "cutscan/enumerate.hpp"
#include "cutscan/graph.hpp"

namespace testutil {

using cutscan::Edge;
using cutscan::Graph;
using cutscan::Vertex;

// --- fixtures ---------------------------------------------------------------

inline Graph path(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, std::move(edges));
}

inline Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, std::move(edges));
}

inline Graph complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, std::move(edges));
}

// Two triangles sharing vertex 2.
inline Graph bowtie() {
  return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

// Three triangles sharing vertex 2.
inline Graph clover() {
  return Graph::from_edges(
      7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {2, 5}, {2, 6}, {5, 6}});
}

// A 5-cycle labeled 0-1-3-4-2-0: the regression fixture where absorbing in
// strictly increasing BFS rank cannot reach the connected set {0,2,3,4}.
inline Graph five_cycle_relabeled() {
  return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 3}, {3, 4}, {2, 4}});
}

// --- mask helpers -----------------------------------------------------------

inline std::vector<Vertex> mask_vertices(std::uint64_t mask) {
  std::vector<Vertex> out;
  for (Vertex v = 0; mask; ++v, mask >>= 1) {
    if (mask & 1) out.push_back(v);
  }
  return out;
}

// Connectivity of the induced subgraph, straight from the edge list.
inline bool mask_connected(const Graph& g, std::uint64_t mask) {
  if (mask == 0) return false;
  std::uint64_t reached = mask & (~mask + 1);  // lowest set bit
  while (true) {
    std::uint64_t grown = reached;
    for (const auto& [u, v] : g.edges()) {
      std::uint64_t bu = std::uint64_t{1} << u, bv = std::uint64_t{1} << v;
      if ((mask & bu) && (mask & bv)) {
        if (grown & bu) grown |= bv;
        if (grown & bv) grown |= bu;
      }
    }
    if (grown == reached) break;
    reached = grown;
  }
  return reached == mask;
}

// --- oracles ----------------------------------------------------------------

// Every subset containing `seed` that induces a connected subgraph.
inline std::set<std::vector<Vertex>> oracle_connected_subsets(const Graph& g,
                                                              Vertex seed) {
  std::set<std::vector<Vertex>> out;
  int n = g.vertex_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask >> seed & 1)) continue;
    if (mask_connected(g, mask)) out.insert(mask_vertices(mask));
  }
  return out;
}

// Every cutset as its crossing-edge set (the canonical identity: for a
// connected graph the bipartition is recoverable from the edge set).
inline std::set<std::vector<Edge>> oracle_cutsets(const Graph& g) {
  std::set<std::vector<Edge>> out;
  int n = g.vertex_count();
  std::uint64_t all = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask < all; ++mask) {
    if (!(mask & 1)) continue;  // canonical side contains vertex 0
    if (!mask_connected(g, mask) || !mask_connected(g, all & ~mask)) continue;
    std::vector<Edge> crossing;
    for (const auto& [u, v] : g.edges()) {
      if (((mask >> u) & 1) != ((mask >> v) & 1)) crossing.emplace_back(u, v);
    }
    out.insert(std::move(crossing));
  }
  return out;
}

// Articulation points by per-vertex deletion.
inline std::vector<Vertex> oracle_interior_vertices(const Graph& g) {
  int n = g.vertex_count();
  std::vector<Vertex> out;
  std::uint64_t all = (std::uint64_t{1} << n) - 1;
  for (Vertex v = 0; v < n; ++v) {
    if (!mask_connected(g, all & ~(std::uint64_t{1} << v))) out.push_back(v);
  }
  return out;
}

// BFS ranks straight from the definition: position in (distance, id) order.
inline std::vector<int> oracle_bfs_ranks(const Graph& g, Vertex seed) {
  int n = g.vertex_count();
  std::vector<int> dist(n, -1);
  dist[seed] = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [u, v] : g.edges()) {
      if (dist[u] >= 0 && (dist[v] < 0 || dist[v] > dist[u] + 1)) {
        dist[v] = dist[u] + 1;
        changed = true;
      }
      if (dist[v] >= 0 && (dist[u] < 0 || dist[u] > dist[v] + 1)) {
        dist[u] = dist[v] + 1;
        changed = true;
      }
    }
  }
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return dist[a] != dist[b] ? dist[a] < dist[b] : a < b;
  });
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[order[i]] = i;
  return rank;
}

// Canonical keys for a report's cutsets (sorted crossing-edge lists).
inline std::set<std::vector<Edge>> cutset_keys(
    const cutscan::EnumerationReport& report) {
  std::set<std::vector<Edge>> keys;
  for (const auto& c : report.cutsets) keys.insert(c.crossing_edges);
  return keys;
}

// Deterministic lightweight generator for random test graphs; kept apart
// from the library's generator so the two can check each other.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 1) {}
  std::uint64_t next() {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    return state_;
  }
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

// Random connected graph: a random spanning tree plus extra random edges.
inline Graph random_connected(Rng& rng, int n, int extra_edges) {
  std::set<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    Vertex parent = static_cast<Vertex>(rng.below(v));
    edges.insert({std::min(parent, v), std::max(parent, v)});
  }
  int total = n * (n - 1) / 2;
  for (int i = 0; i < extra_edges && static_cast<int>(edges.size()) < total;) {
    Vertex u = static_cast<Vertex>(rng.below(n));
    Vertex v = static_cast<Vertex>(rng.below(n));
    if (u == v) continue;
    edges.insert({std::min(u, v), std::max(u, v)});
    ++i;
  }
  return Graph::from_edges(n, {edges.begin(), edges.end()});
}

}  // namespace testutil

#endif  // CUTSCAN_TEST_UTIL_HPP
