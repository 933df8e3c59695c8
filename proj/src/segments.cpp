#include "cutscan/segments.hpp"

#include <algorithm>

namespace cutscan {

// Hopcroft-Tarjan block decomposition with an explicit edge stack; each
// popped block is one elementary segment.
std::vector<Segment> decompose_segments(const Graph& g) {
  if (!is_connected(g)) throw DataError("decompose_segments: graph not connected");
  int n = g.vertex_count();
  if (n == 1) return {Segment{{0}, {}}};

  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), iter(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<Vertex> call_stack;
  std::vector<Segment> segments;
  int timer = 0;

  auto pop_block = [&](const Edge& until) {
    Segment seg;
    while (true) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      seg.edges.push_back(e);
      seg.vertices.push_back(e.first);
      seg.vertices.push_back(e.second);
      if (e == until) break;
    }
    std::sort(seg.edges.begin(), seg.edges.end());
    std::sort(seg.vertices.begin(), seg.vertices.end());
    seg.vertices.erase(std::unique(seg.vertices.begin(), seg.vertices.end()),
                       seg.vertices.end());
    segments.push_back(std::move(seg));
  };

  call_stack.push_back(0);
  disc[0] = low[0] = timer++;
  while (!call_stack.empty()) {
    Vertex u = call_stack.back();
    auto nb = g.neighbors(u);
    if (iter[u] < static_cast<int>(nb.size())) {
      Vertex w = nb[iter[u]++];
      if (disc[w] == -1) {
        edge_stack.emplace_back(std::min(u, w), std::max(u, w));
        parent[w] = u;
        disc[w] = low[w] = timer++;
        call_stack.push_back(w);
      } else if (w != parent[u] && disc[w] < disc[u]) {
        edge_stack.emplace_back(std::min(u, w), std::max(u, w));
        low[u] = std::min(low[u], disc[w]);
      }
    } else {
      call_stack.pop_back();
      Vertex p = parent[u];
      if (p != -1) {
        low[p] = std::min(low[p], low[u]);
        if (low[u] >= disc[p]) {
          pop_block({std::min(p, u), std::max(p, u)});
        }
      }
    }
  }

  std::sort(segments.begin(), segments.end(),
            [](const Segment& a, const Segment& b) {
              return a.edges.front() < b.edges.front();
            });
  return segments;
}

}  // namespace cutscan
