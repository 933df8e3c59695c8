#ifndef CUTSCAN_ENHANCED_HPP
#define CUTSCAN_ENHANCED_HPP

#include <optional>
#include <vector>

#include "cutscan/cutset.hpp"
#include "cutscan/graph.hpp"
#include "cutscan/report.hpp"

namespace cutscan {

/// Cluster structure at an interior contracted vertex: the components of
/// ⟨V - F⟩, classified against the pivot rank. A cluster is absorbable when
/// every one of its vertices has BFS rank above the rank of the last vertex
/// contracted into the pivot.
struct ClusterAnalysis {
  std::vector<std::vector<Vertex>> clusters;  // sorted, by smallest member
  std::vector<char> absorbable;               // per-cluster flag
  int inabsorbable_count = 0;
  /// Highest-rank vertex over all absorbable clusters; populated only when
  /// exactly one cluster is inabsorbable (the cut-through case).
  std::optional<Vertex> cut_through_target;
};

/// Classifies the clusters of a contraction state. The contracted vertex
/// must be interior (⟨V - F⟩ has at least two components); throws
/// std::logic_error otherwise (the caller should not have asked).
ClusterAnalysis analyze_clusters(const Graph& g, const ContractionState& state,
                                 const BfsOrdering& order);

/// Cut-through transient phase: while active, contraction continues but
/// exteriority checks and cluster analyses are suppressed, until `target`
/// is absorbed.
struct CutThroughPhase {
  bool active = false;
  Vertex target = -1;
};

/// Optional instrumentation for tests: which subtrees were pruned and where
/// cut-through phases began.
struct EnhancedTrace {
  struct PruneEvent {
    std::vector<Vertex> absorbed;  // sorted
    std::vector<Vertex> excluded;  // sorted
  };
  struct CutThroughEvent {
    std::vector<Vertex> absorbed;
    std::vector<Vertex> excluded;
    Vertex target;
  };
  std::vector<PruneEvent> prunes;
  std::vector<CutThroughEvent> cut_throughs;
};

/// The pruned contraction scan. Emits exactly the cutset set of
/// enumerate_recursive while abandoning every subtree whose interior
/// contracted vertex has two or more clusters that can never be fully
/// absorbed in that subtree, and crossing one-blocked-cluster states in a
/// cut-through phase. Never does more iterations than enumerate_recursive.
EnumerationReport enumerate_enhanced(const Graph& g, Vertex seed);
EnumerationReport enumerate_enhanced(const Graph& g, Vertex seed,
                                     const CutsetSink& sink,
                                     EnhancedTrace* trace = nullptr);

}  // namespace cutscan

#endif  // CUTSCAN_ENHANCED_HPP
