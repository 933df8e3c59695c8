#ifndef CUTSCAN_REPORT_HPP
#define CUTSCAN_REPORT_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "cutscan/cutset.hpp"

namespace cutscan {

/// Receives cutsets as they are found; lets the CLI stream large outputs
/// instead of buffering the whole list.
using CutsetSink = std::function<void(const Cutset&)>;

/// Result of one enumeration run. `cutsets` is filled by the collecting
/// overloads and left empty when a sink is supplied; `cutset_count` is
/// always set.
struct EnumerationReport {
  std::vector<Cutset> cutsets;
  std::uint64_t cutset_count = 0;

  /// Invocations of the recursive subroutine, root included (for the
  /// brute-force scan: bipartitions examined).
  std::uint64_t iterations = 0;
  /// Complement-connectivity tests actually performed.
  std::uint64_t connectivity_checks = 0;
  /// Hits of the visited-state membership check. The scan guarantees each
  /// state is reached once, so this must stay 0; the counter exists to
  /// assert that at runtime.
  std::uint64_t duplicates_detected = 0;

  // Enhanced-scan counters (0 for the other algorithms).
  std::uint64_t pruned_subtrees = 0;
  std::uint64_t cut_through_states = 0;

  double wall_time_ms = 0.0;
};

}  // namespace cutscan

#endif  // CUTSCAN_REPORT_HPP
