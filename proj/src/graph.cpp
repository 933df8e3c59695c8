#include "cutscan/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace cutscan {

Graph Graph::from_edges(int vertex_count, std::vector<Edge> edges) {
  if (vertex_count <= 0) {
    throw DataError("graph must have at least one vertex");
  }
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw DataError("edge endpoint out of range: " + std::to_string(u) +
                      " " + std::to_string(v) + " (n=" +
                      std::to_string(vertex_count) + ")");
    }
    if (u == v) {
      throw DataError("self-loop at vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto it = std::adjacent_find(edges.begin(), edges.end());
      it != edges.end()) {
    throw DataError("duplicate edge " + std::to_string(it->first) + " " +
                    std::to_string(it->second));
  }

  Graph g;
  g.n_ = vertex_count;
  g.edges_ = std::move(edges);
  g.adj_start_.assign(vertex_count + 1, 0);
  for (const auto& [u, v] : g.edges_) {
    ++g.adj_start_[u + 1];
    ++g.adj_start_[v + 1];
  }
  for (int v = 0; v < vertex_count; ++v) g.adj_start_[v + 1] += g.adj_start_[v];
  g.adj_.resize(2 * g.edges_.size());
  std::vector<int> fill(g.adj_start_.begin(), g.adj_start_.end() - 1);
  for (const auto& [u, v] : g.edges_) {
    g.adj_[fill[u]++] = v;
    g.adj_[fill[v]++] = u;
  }
  for (int v = 0; v < vertex_count; ++v) {
    std::sort(g.adj_.begin() + g.adj_start_[v], g.adj_.begin() + g.adj_start_[v + 1]);
  }
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

namespace {

// Strict integer parse; rejects trailing junk.
bool parse_int(std::string_view tok, long long& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && p == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

[[noreturn]] void parse_fail(int line_no, const std::string& msg) {
  throw DataError("line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

Graph load_graph(std::istream& in) {
  std::string raw;
  int line_no = 0;
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  std::unordered_set<long long> seen;
  long long edges_read = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line[0] == '#') continue;
    auto toks = split_ws(line);
    if (toks.empty()) continue;

    if (n < 0) {
      if (toks.size() != 3 || toks[0] != "p") {
        parse_fail(line_no, "expected header \"p <n> <m>\"");
      }
      if (!parse_int(toks[1], n) || !parse_int(toks[2], m) || n <= 0 || m < 0) {
        parse_fail(line_no, "bad header values");
      }
      edges.reserve(static_cast<size_t>(m));
      continue;
    }

    if (edges_read == m) {
      parse_fail(line_no, "unexpected extra line after " + std::to_string(m) +
                              " edges");
    }
    long long u, v;
    if (toks.size() != 2 || !parse_int(toks[0], u) || !parse_int(toks[1], v)) {
      parse_fail(line_no, "expected edge \"<u> <v>\"");
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      parse_fail(line_no, "endpoint out of range (n=" + std::to_string(n) + ")");
    }
    if (u == v) {
      parse_fail(line_no, "self-loop " + std::to_string(u) + " " +
                              std::to_string(v));
    }
    long long key = std::min(u, v) * n + std::max(u, v);
    if (!seen.insert(key).second) {
      parse_fail(line_no, "duplicate edge " + std::to_string(u) + " " +
                              std::to_string(v));
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    ++edges_read;
  }
  if (n < 0) throw DataError("missing header \"p <n> <m>\"");
  if (edges_read != m) {
    throw DataError("expected " + std::to_string(m) + " edges, got " +
                    std::to_string(edges_read));
  }
  return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  return load_graph(in);
}

void save_graph(const Graph& g, std::ostream& out,
                const std::string& header_comment) {
  if (!header_comment.empty()) {
    std::istringstream lines(header_comment);
    std::string line;
    while (std::getline(lines, line)) out << "# " << line << "\n";
  }
  out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

namespace {

// BFS from `start` over vertices where allowed(v) is true; returns the
// number reached and marks them in `visited`.
int sweep(const Graph& g, Vertex start, const std::vector<char>& allowed,
          std::vector<char>& visited, std::vector<Vertex>& queue) {
  queue.clear();
  queue.push_back(start);
  visited[start] = 1;
  int reached = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    ++reached;
    for (Vertex w : g.neighbors(u)) {
      if (allowed[w] && !visited[w]) {
        visited[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return reached;
}

}  // namespace

bool is_connected(const Graph& g) {
  int n = g.vertex_count();
  std::vector<char> allowed(n, 1), visited(n, 0);
  std::vector<Vertex> queue;
  return sweep(g, 0, allowed, visited, queue) == n;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<char> allowed(n, 1), visited(n, 0);
  std::vector<Vertex> queue;
  std::vector<std::vector<Vertex>> comps;
  for (Vertex v = 0; v < n; ++v) {
    if (visited[v]) continue;
    sweep(g, v, allowed, visited, queue);
    std::sort(queue.begin(), queue.end());
    comps.emplace_back(queue);
  }
  return comps;
}

bool induced_connected(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) throw DataError("induced_connected: empty vertex set");
  int n = g.vertex_count();
  std::vector<char> allowed(n, 0), visited(n, 0);
  int size = 0;
  for (Vertex v : s) {
    if (v < 0 || v >= n) throw DataError("induced_connected: vertex out of range");
    if (!allowed[v]) {
      allowed[v] = 1;
      ++size;
    }
  }
  std::vector<Vertex> queue;
  return sweep(g, s[0], allowed, visited, queue) == size;
}

bool is_exterior(const Graph& g, Vertex v) {
  int n = g.vertex_count();
  if (n < 2) throw DataError("is_exterior: graph has no complement for n=1");
  if (v < 0 || v >= n) throw DataError("is_exterior: vertex out of range");
  std::vector<char> allowed(n, 1), visited(n, 0);
  allowed[v] = 0;
  std::vector<Vertex> queue;
  Vertex start = (v == 0) ? 1 : 0;
  return sweep(g, start, allowed, visited, queue) == n - 1;
}

std::vector<Vertex> frontier_of(const Graph& g, std::span<const Vertex> f) {
  if (f.empty()) throw DataError("frontier_of: empty vertex set");
  int n = g.vertex_count();
  std::vector<char> in_f(n, 0), out(n, 0);
  for (Vertex v : f) {
    if (v < 0 || v >= n) throw DataError("frontier_of: vertex out of range");
    in_f[v] = 1;
  }
  std::vector<Vertex> result;
  for (Vertex v : f) {
    for (Vertex w : g.neighbors(v)) {
      if (!in_f[w] && !out[w]) {
        out[w] = 1;
        result.push_back(w);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

bool complement_connected(const Graph& g, std::span<const Vertex> f) {
  int n = g.vertex_count();
  std::vector<char> allowed(n, 1);
  int f_size = 0;
  for (Vertex v : f) {
    if (v < 0 || v >= n) throw DataError("complement_connected: vertex out of range");
    if (allowed[v]) {
      allowed[v] = 0;
      ++f_size;
    }
  }
  if (f_size == 0) throw DataError("complement_connected: empty vertex set");
  if (f_size == n) throw DataError("complement_connected: set equals V");
  Vertex start = 0;
  while (!allowed[start]) ++start;
  std::vector<char> visited(n, 0);
  std::vector<Vertex> queue;
  return sweep(g, start, allowed, visited, queue) == n - f_size;
}

std::vector<Vertex> interior_vertices(const Graph& g) {
  if (!is_connected(g)) throw DataError("interior_vertices: graph not connected");
  int n = g.vertex_count();
  // Iterative Tarjan articulation-point search.
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), child_count(n, 0);
  std::vector<char> is_art(n, 0);
  std::vector<int> iter(n, 0);
  int timer = 0;
  std::vector<Vertex> stack;
  stack.push_back(0);
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    Vertex u = stack.back();
    auto nb = g.neighbors(u);
    if (iter[u] < static_cast<int>(nb.size())) {
      Vertex w = nb[iter[u]++];
      if (disc[w] == -1) {
        parent[w] = u;
        ++child_count[u];
        disc[w] = low[w] = timer++;
        stack.push_back(w);
      } else if (w != parent[u]) {
        low[u] = std::min(low[u], disc[w]);
      }
    } else {
      stack.pop_back();
      Vertex p = parent[u];
      if (p != -1) {
        low[p] = std::min(low[p], low[u]);
        if (p != 0 && low[u] >= disc[p]) is_art[p] = 1;
      }
    }
  }
  if (child_count[0] > 1) is_art[0] = 1;
  std::vector<Vertex> result;
  for (Vertex v = 0; v < n; ++v) {
    if (is_art[v]) result.push_back(v);
  }
  return result;
}

std::vector<Edge> crossing_edges(const Graph& g, std::span<const Vertex> s) {
  int n = g.vertex_count();
  std::vector<char> in_s(n, 0);
  int size = 0;
  for (Vertex v : s) {
    if (v < 0 || v >= n) throw DataError("crossing_edges: vertex out of range");
    if (!in_s[v]) {
      in_s[v] = 1;
      ++size;
    }
  }
  if (size == 0 || size == n) {
    throw DataError("crossing_edges: set must be a proper non-empty subset");
  }
  std::vector<Edge> result;
  for (const auto& [u, v] : g.edges()) {
    if (in_s[u] != in_s[v]) result.emplace_back(u, v);
  }
  return result;
}

std::pair<Graph, std::vector<Vertex>> induce(const Graph& g,
                                             std::span<const Vertex> vertices) {
  std::vector<Vertex> verts(vertices.begin(), vertices.end());
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<int> local(g.vertex_count(), -1);
  for (size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    if (local[u] >= 0 && local[v] >= 0) edges.emplace_back(local[u], local[v]);
  }
  return {Graph::from_edges(static_cast<int>(verts.size()), std::move(edges)),
          std::move(verts)};
}

Vertex min_degree_vertex(const Graph& g) {
  Vertex best = 0;
  for (Vertex v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) < g.degree(best)) best = v;
  }
  return best;
}

}  // namespace cutscan
