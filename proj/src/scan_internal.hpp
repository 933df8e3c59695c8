#ifndef CUTSCAN_SCAN_INTERNAL_HPP
#define CUTSCAN_SCAN_INTERNAL_HPP

// Shared mechanics of the BFS-constrained contraction scans. Not installed;
// the enumerators in enumerate.cpp and enhanced.cpp build on this.
//
// A scan state is the absorbed set F plus the sibling-exclusion set X. At
// every state the candidate list is frontier(F) - X in ascending BFS rank;
// descending into the i-th candidate excludes the earlier ones for that
// subtree. Every connected F containing the seed is reached exactly once
// (asserted at runtime through the state registry).

#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "cutscan/bfs_ordering.hpp"
#include "cutscan/graph.hpp"

namespace cutscan::internal {

struct MaskHash {
  size_t operator()(const std::vector<std::uint64_t>& mask) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t w : mask) {
      w *= 0xff51afd7ed558ccdULL;
      w ^= w >> 33;
      h = (h ^ w) * 0xc4ceb9fe1a85ec53ULL;
    }
    return static_cast<size_t>(h);
  }
};

class ScanBase {
 public:
  ScanBase(const Graph& g, const BfsOrdering& order)
      : g_(g),
        order_(order),
        n_(g.vertex_count()),
        absorbed_(n_, 0),
        excluded_(n_, 0),
        mask_((n_ + 63) / 64, 0),
        stamp_of_(n_, 0),
        level_bufs_(n_ + 1) {  // sized once: recursion depth is at most n
    absorbed_list_.reserve(n_);
  }

  const Graph& graph() const { return g_; }
  const BfsOrdering& order() const { return order_; }
  int n() const { return n_; }
  int absorbed_count() const { return static_cast<int>(absorbed_list_.size()); }
  const std::vector<Vertex>& absorbed_list() const { return absorbed_list_; }
  bool is_absorbed(Vertex v) const { return absorbed_[v] != 0; }
  bool is_excluded(Vertex v) const { return excluded_[v] != 0; }

  std::vector<Vertex> sorted_absorbed() const {
    std::vector<Vertex> out(absorbed_list_);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Vertex> sorted_excluded() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n_; ++v) {
      if (excluded_[v]) out.push_back(v);
    }
    return out;
  }

  void absorb(Vertex v) {
    absorbed_[v] = 1;
    absorbed_list_.push_back(v);
    mask_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void release(Vertex v) {
    absorbed_[v] = 0;
    absorbed_list_.pop_back();
    mask_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }
  void exclude(Vertex v) { excluded_[v] = 1; }
  void unexclude(Vertex v) { excluded_[v] = 0; }

  /// True when the current absorbed set was not registered before.
  bool register_state() { return seen_.insert(mask_).second; }

  /// Fills `out` with frontier(F) - X in ascending BFS rank.
  void candidates(std::vector<Vertex>& out) {
    out.clear();
    std::int64_t stamp = ++stamp_;
    for (Vertex u : absorbed_list_) {
      for (Vertex w : g_.neighbors(u)) {
        if (!absorbed_[w] && !excluded_[w] && stamp_of_[w] != stamp) {
          stamp_of_[w] = stamp;
          out.push_back(w);
        }
      }
    }
    std::sort(out.begin(), out.end(), [this](Vertex a, Vertex b) {
      return order_.order_of[a] < order_.order_of[b];
    });
  }

  /// Number of original edges between F and `u`: the multiplicity of u in
  /// the contracted vertex's neighborhood.
  int edge_multiplicity(Vertex u) const {
    int count = 0;
    for (Vertex w : g_.neighbors(u)) count += absorbed_[w];
    return count;
  }

  /// True iff ⟨V - F⟩ is connected. F must be a proper subset.
  bool complement_is_connected() {
    int remaining = n_ - absorbed_count();
    Vertex start = 0;
    while (absorbed_[start]) ++start;
    ++stamp_;
    return complement_sweep(start) == remaining;
  }

  /// Components of ⟨V - F⟩ into `out` (each sorted, ordered by smallest
  /// member); returns their number. F must be a proper subset.
  int complement_components(std::vector<std::vector<Vertex>>& out) {
    out.clear();
    int remaining = n_ - absorbed_count();
    int found = 0;
    ++stamp_;
    for (Vertex v = 0; v < n_ && found < remaining; ++v) {
      if (absorbed_[v] || stamp_of_[v] == stamp_) continue;
      found += complement_sweep(v);
      std::sort(bfs_buf_.begin(), bfs_buf_.end());
      out.push_back(bfs_buf_);
    }
    return static_cast<int>(out.size());
  }

  /// Reusable per-depth buffer (avoids one allocation per visited state).
  /// References stay valid across deeper visits: the pool is sized at
  /// construction and never grows.
  std::vector<Vertex>& level_buffer(int depth) { return level_bufs_[depth]; }

 private:
  // BFS over unabsorbed vertices from `start` under the current stamp;
  // leaves the component in bfs_buf_.
  int complement_sweep(Vertex start) {
    bfs_buf_.clear();
    stamp_of_[start] = stamp_;
    bfs_buf_.push_back(start);
    for (size_t head = 0; head < bfs_buf_.size(); ++head) {
      Vertex u = bfs_buf_[head];
      for (Vertex w : g_.neighbors(u)) {
        if (!absorbed_[w] && stamp_of_[w] != stamp_) {
          stamp_of_[w] = stamp_;
          bfs_buf_.push_back(w);
        }
      }
    }
    return static_cast<int>(bfs_buf_.size());
  }

  const Graph& g_;
  const BfsOrdering& order_;
  int n_;
  std::vector<char> absorbed_, excluded_;
  std::vector<Vertex> absorbed_list_;
  std::vector<std::uint64_t> mask_;
  std::unordered_set<std::vector<std::uint64_t>, MaskHash> seen_;
  std::vector<std::int64_t> stamp_of_;
  std::int64_t stamp_ = 0;
  std::vector<Vertex> bfs_buf_;
  std::vector<std::vector<Vertex>> level_bufs_;
};

}  // namespace cutscan::internal

#endif  // CUTSCAN_SCAN_INTERNAL_HPP
