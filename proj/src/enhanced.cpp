#include "cutscan/enhanced.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "cutscan/bfs_ordering.hpp"
#include "scan_internal.hpp"

namespace cutscan {

ClusterAnalysis analyze_clusters(const Graph& g, const ContractionState& state,
                                 const BfsOrdering& order) {
  int n = g.vertex_count();
  std::vector<char> absorbed(n, 0);
  for (Vertex v : state.absorbed) absorbed[v] = 1;

  ClusterAnalysis analysis;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    if (absorbed[v] || seen[v]) continue;
    queue.clear();
    queue.push_back(v);
    seen[v] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
      for (Vertex w : g.neighbors(queue[head])) {
        if (!absorbed[w] && !seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    analysis.clusters.push_back(queue);
  }
  if (analysis.clusters.size() < 2) {
    throw std::logic_error(
        "analyze_clusters: contracted vertex is exterior, no clusters to "
        "classify");
  }

  for (const auto& cluster : analysis.clusters) {
    int min_rank = order.order_of[cluster.front()];
    for (Vertex v : cluster) min_rank = std::min(min_rank, order.order_of[v]);
    bool is_absorbable = min_rank > state.pivot_rank;
    analysis.absorbable.push_back(is_absorbable ? 1 : 0);
    if (!is_absorbable) ++analysis.inabsorbable_count;
  }

  if (analysis.inabsorbable_count == 1) {
    Vertex target = -1;
    int best_rank = -1;
    for (size_t i = 0; i < analysis.clusters.size(); ++i) {
      if (!analysis.absorbable[i]) continue;
      for (Vertex v : analysis.clusters[i]) {
        if (order.order_of[v] > best_rank) {
          best_rank = order.order_of[v];
          target = v;
        }
      }
    }
    analysis.cut_through_target = target;
  }
  return analysis;
}

namespace {

using Clock = std::chrono::steady_clock;

// Depth-first contraction scan with blocked-cluster pruning and the
// cut-through transient phase.
//
// Decisions are made from exclusion-based absorbability: a cluster that
// contains an excluded vertex can never be fully absorbed in this subtree
// (the vertex is barred from contraction). With two such clusters no
// descendant state is ever exterior, so the subtree is abandoned. With
// exactly one, a cutset below must absorb every other cluster whole, so
// the scan stops branching and contracts the open clusters' vertices as a
// single chain (lowest reachable BFS rank first, no exteriority checks)
// until the target is absorbed; every emitting superset stays reachable
// under the resumed normal recursion at the chain's end. Rank-based
// classification (ClusterAnalysis) agrees with the exclusion-based one on
// any cluster whose blocking vertex was excluded.
class EnhancedScan {
 public:
  EnhancedScan(const Graph& g, const BfsOrdering& order,
               EnumerationReport* report, const CutsetSink* sink,
               EnhancedTrace* trace)
      : base_(g, order),
        report_(report),
        sink_(sink),
        trace_(trace),
        clusters_cache_(g.vertex_count() + 1),
        open_mask_cache_(g.vertex_count() + 1) {}

  void run() {
    base_.absorb(base_.order().seed);
    visit(0, Phase{});
    base_.release(base_.order().seed);
  }

 private:
  struct Phase {
    CutThroughPhase flag;
    const std::vector<char>* open_vertices = nullptr;  // set while active
  };

  void visit(int depth, Phase phase) {
    ++report_->iterations;
    if (!base_.register_state()) ++report_->duplicates_detected;

    if (phase.flag.active) {
      ++report_->cut_through_states;
    } else if (base_.absorbed_count() < base_.n()) {
      ++report_->connectivity_checks;
      auto& clusters = clusters_cache_[depth];
      int parts = base_.complement_components(clusters);
      if (parts == 1) {
        emit();
      } else {
        int blocked = 0;
        for (const auto& cluster : clusters) {
          if (cluster_blocked(cluster)) ++blocked;
        }
        if (blocked >= 2) {
          ++report_->pruned_subtrees;
          if (trace_) {
            trace_->prunes.push_back(
                {base_.sorted_absorbed(), base_.sorted_excluded()});
          }
          return;
        }
        if (blocked == 1) {
          auto& open = open_mask_cache_[depth];
          open.assign(base_.n(), 0);
          Vertex target = -1;
          int best_rank = -1;
          for (const auto& cluster : clusters) {
            if (cluster_blocked(cluster)) continue;
            for (Vertex v : cluster) {
              open[v] = 1;
              if (base_.order().order_of[v] > best_rank) {
                best_rank = base_.order().order_of[v];
                target = v;
              }
            }
          }
          phase = Phase{CutThroughPhase{true, target}, &open};
          if (trace_) {
            trace_->cut_throughs.push_back(
                {base_.sorted_absorbed(), base_.sorted_excluded(), target});
          }
        }
      }
    }

    auto& cands = base_.level_buffer(depth);
    base_.candidates(cands);

    if (phase.flag.active) {
      // Transient chain: one child, no sibling exclusions. An open cluster
      // always keeps a vertex on the frontier until fully absorbed.
      Vertex next = -1;
      for (Vertex u : cands) {
        if ((*phase.open_vertices)[u]) {
          next = u;
          break;
        }
      }
      if (next < 0) {
        throw std::logic_error("cut-through chain lost its open clusters");
      }
      Phase child_phase = next == phase.flag.target ? Phase{} : phase;
      base_.absorb(next);
      visit(depth + 1, child_phase);
      base_.release(next);
      return;
    }

    for (size_t i = 0; i < cands.size(); ++i) {
      base_.absorb(cands[i]);
      visit(depth + 1, Phase{});
      base_.release(cands[i]);
      if (i + 1 < cands.size()) base_.exclude(cands[i]);
    }
    for (size_t i = 0; i + 1 < cands.size(); ++i) base_.unexclude(cands[i]);
  }

  bool cluster_blocked(const std::vector<Vertex>& cluster) const {
    for (Vertex v : cluster) {
      if (base_.is_excluded(v)) return true;
    }
    return false;
  }

  void emit() {
    Cutset c = make_cutset(base_.graph(), base_.sorted_absorbed());
    ++report_->cutset_count;
    if (sink_) {
      (*sink_)(c);
    } else {
      report_->cutsets.push_back(std::move(c));
    }
  }

  internal::ScanBase base_;
  EnumerationReport* report_;
  const CutsetSink* sink_;
  EnhancedTrace* trace_;
  // Per-depth buffers, sized once so references survive recursion.
  std::vector<std::vector<std::vector<Vertex>>> clusters_cache_;
  std::vector<std::vector<char>> open_mask_cache_;
};

EnumerationReport run_enhanced(const Graph& g, Vertex seed,
                               const CutsetSink* sink, EnhancedTrace* trace) {
  auto start = Clock::now();
  BfsOrdering order = bfs_order(g, seed);
  EnumerationReport report;
  EnhancedScan scan(g, order, &report, sink, trace);
  scan.run();
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return report;
}

}  // namespace

EnumerationReport enumerate_enhanced(const Graph& g, Vertex seed) {
  return run_enhanced(g, seed, nullptr, nullptr);
}

EnumerationReport enumerate_enhanced(const Graph& g, Vertex seed,
                                     const CutsetSink& sink,
                                     EnhancedTrace* trace) {
  return run_enhanced(g, seed, &sink, trace);
}

}  // namespace cutscan
