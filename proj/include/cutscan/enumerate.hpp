#ifndef CUTSCAN_ENUMERATE_HPP
#define CUTSCAN_ENUMERATE_HPP

#include <vector>

#include "cutscan/bigint.hpp"
#include "cutscan/graph.hpp"
#include "cutscan/report.hpp"

namespace cutscan {

/// Default size cap for the exponential brute-force oracles. Overridable
/// per call (and from the CLI); refusal beats running forever.
inline constexpr int kDefaultBruteCap = 20;

// --- Brute-force partition oracle -------------------------------------------
//
// Examines every bipartition ⟨S, V-S⟩ with vertex 0 in S (all
// 2^(n-1) - 1 of them) and emits those where both sides induce connected
// subgraphs. iterations equals the number of bipartitions examined.

EnumerationReport enumerate_brute(const Graph& g, int cap = kDefaultBruteCap);
EnumerationReport enumerate_brute(const Graph& g, const CutsetSink& sink,
                                  int cap = kDefaultBruteCap);

// --- Connected-subgraph scanner ----------------------------------------------

struct ConnectedSubsets {
  /// Every F ⊆ V with seed ∈ F and ⟨F⟩ connected (V included), each
  /// exactly once, in depth-first scan order; each subset sorted.
  std::vector<std::vector<Vertex>> subsets;
  std::uint64_t iterations = 0;
};

/// Scans all connected subsets containing `seed` by repeated contraction.
/// Candidates extend the absorbed set from its frontier in ascending BFS
/// rank; the subtree entered for a candidate excludes the candidates tried
/// before it at the same state, so no subset is reached twice.
/// Throws DataError on a disconnected graph.
ConnectedSubsets connected_subsets(const Graph& g, Vertex seed);

// --- Recursive contraction enumerator ----------------------------------------

/// Walks the connected-subset scan and emits ⟨F, V-F⟩ whenever the
/// complement also induces a connected subgraph, i.e. whenever the vertex
/// contracted from F is exterior in G/F. Emits every cutset of g exactly
/// once; side_s is the seed side.
EnumerationReport enumerate_recursive(const Graph& g, Vertex seed);
EnumerationReport enumerate_recursive(const Graph& g, Vertex seed,
                                      const CutsetSink& sink);

// --- Skipped-state estimator ---------------------------------------------------

enum class SkipMode {
  literal,  // c = n_original - |neighborhood| - 1 (fixed n)
  current,  // c = n_contracted - |neighborhood| - 1 (n shrinks as F grows)
};

/// Diagnostic estimate of the disconnected subsets never scanned: walks the
/// same recursion tree and accumulates 2^(c-1) at every state with a
/// non-empty candidate neighborhood, where the neighborhood size counts the
/// contraction multi-edges (one per original edge from F to a candidate)
/// and c <= 0 contributes nothing. The estimate may differ from the true
/// count; see count_skipped_brute for ground truth on small graphs.
struct SkippedStateCount {
  BigUint total;
  SkipMode mode = SkipMode::current;
};

SkippedStateCount count_skipped(const Graph& g, Vertex seed, SkipMode mode);

/// Exhaustive count of subsets F with seed ∈ F and ⟨F⟩ disconnected.
BigUint count_skipped_brute(const Graph& g, Vertex seed,
                            int cap = kDefaultBruteCap);

}  // namespace cutscan

#endif  // CUTSCAN_ENUMERATE_HPP
