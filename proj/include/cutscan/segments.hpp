#ifndef CUTSCAN_SEGMENTS_HPP
#define CUTSCAN_SEGMENTS_HPP

#include <vector>

#include "cutscan/graph.hpp"

namespace cutscan {

/// One elementary segment of a multi-segment graph: a maximal piece with no
/// interior vertex of its own. Articulation (pivot) vertices are shared
/// between the segments they join; the edge sets partition E.
struct Segment {
  std::vector<Vertex> vertices;  // sorted, includes pivot vertices
  std::vector<Edge> edges;       // sorted induced edges

  bool operator==(const Segment&) const = default;
};

/// Splits a connected graph at its interior vertices into elementary
/// segments (a single-edge segment is monolithic by convention). A
/// monolithic input yields one segment equal to the whole graph.
/// Segments are ordered by their smallest edge.
std::vector<Segment> decompose_segments(const Graph& g);

}  // namespace cutscan

#endif  // CUTSCAN_SEGMENTS_HPP
