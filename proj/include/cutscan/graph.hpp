#ifndef CUTSCAN_GRAPH_HPP
#define CUTSCAN_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cutscan/errors.hpp"

namespace cutscan {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // normalized so that first < second

/// Immutable simple undirected graph over vertex ids [0, n).
///
/// Construction validates the simple-graph invariants (no self-loops, no
/// duplicate edges, endpoints in range); afterwards the graph is safe to
/// share across threads.
class Graph {
 public:
  /// Builds a graph from an edge list. Edges may be given in either
  /// orientation; they are normalized and sorted. Throws DataError on a
  /// self-loop, a duplicate edge, or an endpoint out of range.
  static Graph from_edges(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Neighbors of v in ascending order.
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + adj_start_[v],
            adj_.data() + adj_start_[v + 1]};
  }

  int degree(Vertex v) const { return adj_start_[v + 1] - adj_start_[v]; }

  /// All edges, normalized (u < v) and sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(Vertex u, Vertex v) const;

 private:
  Graph() = default;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> adj_start_;  // CSR offsets, size n_+1
  std::vector<Vertex> adj_;
};

// --- edge-list file format -------------------------------------------------
//
// Text, UTF-8. Optional comment lines starting with '#', then a header line
// "p <n> <m>", then exactly m lines "<u> <v>" with 0 <= u,v < n and u != v.
// Whitespace-separated, LF or CRLF.

/// Parses the edge-list format. Errors name the offending line.
Graph load_graph(std::istream& in);
Graph load_graph_file(const std::string& path);

/// Writes the edge-list format. Each line of `header_comment` is emitted
/// as a '#' comment before the "p" line.
void save_graph(const Graph& g, std::ostream& out,
                const std::string& header_comment = "");

// --- connectivity ------------------------------------------------------------

bool is_connected(const Graph& g);

/// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> components(const Graph& g);

/// True iff the subgraph induced by `s` is connected. `s` must be a
/// non-empty subset of V (throws DataError otherwise).
bool induced_connected(const Graph& g, std::span<const Vertex> s);

/// True iff deleting v keeps the graph connected, i.e. v is not an
/// articulation point. Requires a connected graph with n >= 2.
bool is_exterior(const Graph& g, Vertex v);

/// Open neighborhood of the vertex set f: all vertices outside f adjacent
/// to some member of f. Equals the neighborhood of the contracted vertex
/// in G/f without materializing the contraction.
std::vector<Vertex> frontier_of(const Graph& g, std::span<const Vertex> f);

/// True iff the subgraph induced by V - f is connected; decides whether
/// the vertex contracted from f is exterior in G/f. f must be a proper
/// non-empty subset of V.
bool complement_connected(const Graph& g, std::span<const Vertex> f);

/// Articulation points of a connected graph, ascending. Linear time.
std::vector<Vertex> interior_vertices(const Graph& g);

/// Edges with exactly one endpoint in s, sorted. s must be a proper
/// non-empty subset of V.
std::vector<Edge> crossing_edges(const Graph& g, std::span<const Vertex> s);

/// Subgraph induced by `vertices` with ids remapped to [0, k); the second
/// member maps local ids back to the originals (ascending).
std::pair<Graph, std::vector<Vertex>> induce(const Graph& g,
                                             std::span<const Vertex> vertices);

/// Lowest-degree vertex, ties broken by lowest id.
Vertex min_degree_vertex(const Graph& g);

}  // namespace cutscan

#endif  // CUTSCAN_GRAPH_HPP
