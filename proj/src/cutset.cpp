#include "cutscan/cutset.hpp"

#include <algorithm>

namespace cutscan {

Cutset make_cutset(const Graph& g, std::span<const Vertex> side_s_sorted) {
  Cutset c;
  c.side_s.assign(side_s_sorted.begin(), side_s_sorted.end());
  int n = g.vertex_count();
  std::vector<char> in_s(n, 0);
  for (Vertex v : c.side_s) in_s[v] = 1;
  c.side_t.reserve(n - c.side_s.size());
  for (Vertex v = 0; v < n; ++v) {
    if (!in_s[v]) c.side_t.push_back(v);
  }
  for (const auto& [u, v] : g.edges()) {
    if (in_s[u] != in_s[v]) c.crossing_edges.emplace_back(u, v);
  }
  return c;
}

bool cutset_valid(const Graph& g, const Cutset& c) {
  if (c.side_s.empty() || c.side_t.empty()) return false;
  if (c.side_s.size() + c.side_t.size() != static_cast<size_t>(g.vertex_count())) {
    return false;
  }
  if (!induced_connected(g, c.side_s) || !induced_connected(g, c.side_t)) {
    return false;
  }
  return crossing_edges(g, c.side_s) == c.crossing_edges;
}

Cutset cutset_from_crossing(const Graph& g, std::span<const Edge> crossing) {
  int n = g.vertex_count();
  std::vector<Edge> cut(crossing.begin(), crossing.end());
  std::sort(cut.begin(), cut.end());
  auto is_cut = [&](Vertex u, Vertex v) {
    Edge e{std::min(u, v), std::max(u, v)};
    return std::binary_search(cut.begin(), cut.end(), e);
  };
  std::vector<int> side(n, -1);
  int sides = 0;
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    if (side[v] != -1) continue;
    if (sides == 2) {
      throw DataError("cutset_from_crossing: more than two components");
    }
    queue.clear();
    queue.push_back(v);
    side[v] = sides;
    for (size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      for (Vertex w : g.neighbors(u)) {
        if (side[w] == -1 && !is_cut(u, w)) {
          side[w] = sides;
          queue.push_back(w);
        }
      }
    }
    ++sides;
  }
  if (sides != 2) {
    throw DataError("cutset_from_crossing: edge set does not split the graph");
  }
  std::vector<Vertex> side_s;
  for (Vertex v = 0; v < n; ++v) {
    if (side[v] == 0) side_s.push_back(v);  // side of vertex 0
  }
  Cutset result = make_cutset(g, side_s);
  if (result.crossing_edges != cut) {
    throw DataError("cutset_from_crossing: edge set is not a minimal cutset");
  }
  return result;
}

ContractionState make_contraction_state(const Graph& g,
                                        const BfsOrdering& order,
                                        std::vector<Vertex> absorbed) {
  std::sort(absorbed.begin(), absorbed.end());
  if (!std::binary_search(absorbed.begin(), absorbed.end(), order.seed)) {
    throw DataError("contraction state must contain the seed vertex");
  }
  if (!induced_connected(g, absorbed)) {
    throw DataError("contraction state must induce a connected subgraph");
  }
  ContractionState state;
  state.frontier = frontier_of(g, absorbed);
  state.pivot_rank = 0;
  for (Vertex v : absorbed) state.pivot_rank = std::max(state.pivot_rank, order.order_of[v]);
  state.absorbed = std::move(absorbed);
  return state;
}

}  // namespace cutscan
