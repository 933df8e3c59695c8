#include "cutscan/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

#include "cutscan/bfs_ordering.hpp"
#include "scan_internal.hpp"

namespace cutscan {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void check_brute_cap(const Graph& g, int cap) {
  int n = g.vertex_count();
  if (n > cap) {
    throw CapError("brute-force scan refused: n=" + std::to_string(n) +
                   " exceeds cap " + std::to_string(cap) +
                   " (raise the cap to allow 2^" + std::to_string(n - 1) +
                   " states)");
  }
  if (n > 62) {
    throw CapError("brute-force scan refused: n=" + std::to_string(n) +
                   " exceeds the 62-vertex bitmask limit");
  }
}

// Connectivity of a vertex subset given as a bitmask over [0, n), with
// preallocated scratch. Used by the brute-force loops.
class MaskConnectivity {
 public:
  explicit MaskConnectivity(const Graph& g)
      : g_(g), stamp_of_(g.vertex_count(), 0) {
    queue_.reserve(g.vertex_count());
  }

  bool connected(std::uint64_t mask) {
    if (mask == 0) return false;
    ++stamp_;
    queue_.clear();
    Vertex start = std::countr_zero(mask);
    queue_.push_back(start);
    stamp_of_[start] = stamp_;
    size_t reached = 0;
    for (size_t head = 0; head < queue_.size(); ++head) {
      Vertex u = queue_[head];
      ++reached;
      for (Vertex w : g_.neighbors(u)) {
        if ((mask >> w & 1) && stamp_of_[w] != stamp_) {
          stamp_of_[w] = stamp_;
          queue_.push_back(w);
        }
      }
    }
    return reached == static_cast<size_t>(std::popcount(mask));
  }

 private:
  const Graph& g_;
  std::vector<std::int64_t> stamp_of_;
  std::int64_t stamp_ = 0;
  std::vector<Vertex> queue_;
};

std::vector<Vertex> mask_to_vertices(std::uint64_t mask) {
  std::vector<Vertex> out;
  while (mask) {
    Vertex v = std::countr_zero(mask);
    out.push_back(v);
    mask &= mask - 1;
  }
  return out;
}

EnumerationReport run_brute(const Graph& g, const CutsetSink* sink, int cap) {
  check_brute_cap(g, cap);
  if (!is_connected(g)) {
    throw DataError("enumerate_brute: graph is disconnected");
  }
  auto start = Clock::now();
  EnumerationReport report;
  int n = g.vertex_count();
  if (n >= 2) {
    MaskConnectivity conn(g);
    // side_s = {0} plus any proper subset of {1..n-1}; states is 2^(n-1)-1.
    std::uint64_t rest = (std::uint64_t{1} << (n - 1)) - 1;
    for (std::uint64_t choice = 0; choice < rest; ++choice) {
      ++report.iterations;
      std::uint64_t side_s = (choice << 1) | 1;
      std::uint64_t side_t = ~side_s & ((std::uint64_t{1} << n) - 1);
      ++report.connectivity_checks;
      if (!conn.connected(side_s)) continue;
      ++report.connectivity_checks;
      if (!conn.connected(side_t)) continue;
      Cutset c = make_cutset(g, mask_to_vertices(side_s));
      ++report.cutset_count;
      if (sink) {
        (*sink)(c);
      } else {
        report.cutsets.push_back(std::move(c));
      }
    }
  }
  report.wall_time_ms = elapsed_ms(start);
  return report;
}

// Depth-first contraction scan shared by the recursive enumerator and the
// connected-subset lister.
class RecursiveScan {
 public:
  RecursiveScan(const Graph& g, const BfsOrdering& order,
                EnumerationReport* report, const CutsetSink* sink,
                ConnectedSubsets* subsets)
      : base_(g, order), report_(report), sink_(sink), subsets_(subsets) {}

  void run() {
    base_.absorb(base_.order().seed);
    visit(0);
    base_.release(base_.order().seed);
  }

 private:
  void visit(int depth) {
    if (report_) {
      ++report_->iterations;
      if (!base_.register_state()) ++report_->duplicates_detected;
      if (base_.absorbed_count() < base_.n()) {
        ++report_->connectivity_checks;
        if (base_.complement_is_connected()) {
          Cutset c = make_cutset(base_.graph(), base_.sorted_absorbed());
          ++report_->cutset_count;
          if (sink_) {
            (*sink_)(c);
          } else {
            report_->cutsets.push_back(std::move(c));
          }
        }
      }
    }
    if (subsets_) {
      ++subsets_->iterations;
      subsets_->subsets.push_back(base_.sorted_absorbed());
    }

    auto& cands = base_.level_buffer(depth);
    base_.candidates(cands);
    for (size_t i = 0; i < cands.size(); ++i) {
      base_.absorb(cands[i]);
      visit(depth + 1);
      base_.release(cands[i]);
      if (i + 1 < cands.size()) base_.exclude(cands[i]);
    }
    for (size_t i = 0; i + 1 < cands.size(); ++i) base_.unexclude(cands[i]);
  }

  internal::ScanBase base_;
  EnumerationReport* report_;
  const CutsetSink* sink_;
  ConnectedSubsets* subsets_;
};

EnumerationReport run_recursive(const Graph& g, Vertex seed,
                                const CutsetSink* sink) {
  auto start = Clock::now();
  BfsOrdering order = bfs_order(g, seed);  // rejects disconnected graphs
  EnumerationReport report;
  RecursiveScan scan(g, order, &report, sink, nullptr);
  scan.run();
  report.wall_time_ms = elapsed_ms(start);
  return report;
}

// Walks the scan tree accumulating the Fig-style 2^(c-1) estimate.
class SkipScan {
 public:
  SkipScan(const Graph& g, const BfsOrdering& order, SkipMode mode)
      : base_(g, order), mode_(mode) {}

  BigUint run() {
    base_.absorb(base_.order().seed);
    visit(0);
    base_.release(base_.order().seed);
    return std::move(total_);
  }

 private:
  void visit(int depth) {
    auto& cands = base_.level_buffer(depth);
    base_.candidates(cands);
    if (cands.empty()) return;

    int neighborhood = 0;  // multi-edge degree of the contracted vertex
    for (Vertex u : cands) neighborhood += base_.edge_multiplicity(u);
    int base_n = mode_ == SkipMode::literal
                     ? base_.n()
                     : base_.n() - base_.absorbed_count() + 1;
    int c = base_n - neighborhood - 1;
    if (c >= 1) total_.add_pow2(static_cast<unsigned>(c - 1));

    for (size_t i = 0; i < cands.size(); ++i) {
      base_.absorb(cands[i]);
      visit(depth + 1);
      base_.release(cands[i]);
      if (i + 1 < cands.size()) base_.exclude(cands[i]);
    }
    for (size_t i = 0; i + 1 < cands.size(); ++i) base_.unexclude(cands[i]);
  }

  internal::ScanBase base_;
  SkipMode mode_;
  BigUint total_;
};

}  // namespace

EnumerationReport enumerate_brute(const Graph& g, int cap) {
  return run_brute(g, nullptr, cap);
}

EnumerationReport enumerate_brute(const Graph& g, const CutsetSink& sink,
                                  int cap) {
  return run_brute(g, &sink, cap);
}

ConnectedSubsets connected_subsets(const Graph& g, Vertex seed) {
  BfsOrdering order = bfs_order(g, seed);
  ConnectedSubsets result;
  RecursiveScan scan(g, order, nullptr, nullptr, &result);
  scan.run();
  return result;
}

EnumerationReport enumerate_recursive(const Graph& g, Vertex seed) {
  return run_recursive(g, seed, nullptr);
}

EnumerationReport enumerate_recursive(const Graph& g, Vertex seed,
                                      const CutsetSink& sink) {
  return run_recursive(g, seed, &sink);
}

SkippedStateCount count_skipped(const Graph& g, Vertex seed, SkipMode mode) {
  BfsOrdering order = bfs_order(g, seed);
  SkipScan scan(g, order, mode);
  return SkippedStateCount{scan.run(), mode};
}

BigUint count_skipped_brute(const Graph& g, Vertex seed, int cap) {
  int n = g.vertex_count();
  if (seed < 0 || seed >= n) throw DataError("count_skipped_brute: seed out of range");
  check_brute_cap(g, cap);
  MaskConnectivity conn(g);
  std::uint64_t count = 0;
  // All subsets containing the seed: fix the seed bit, enumerate the rest.
  std::uint64_t seed_bit = std::uint64_t{1} << seed;
  std::uint64_t others = ((std::uint64_t{1} << n) - 1) & ~seed_bit;
  // Iterate subsets of `others` including the empty one.
  std::uint64_t sub = 0;
  while (true) {
    if (!conn.connected(sub | seed_bit)) ++count;
    if (sub == others) break;
    sub = (sub - others) & others;  // next subset of `others`
  }
  return BigUint(count);
}

}  // namespace cutscan
