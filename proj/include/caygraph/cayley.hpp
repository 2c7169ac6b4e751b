#pragma once

#include "caygraph/graph.hpp"
#include "caygraph/group.hpp"

namespace caygraph {

/// Raised when the group-law edges and the family's literal edge rule
/// disagree; signals a wrong multiplication convention.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Materialize a finite window/quotient of the marked group's Cayley graph.
///
/// Edges are generated by left multiplication x -> s*x restricted to the
/// window; for every family with a stated pairwise edge rule the builder
/// computes the edge set a second time from that rule and throws
/// ConsistencyError on any mismatch.
///
/// Shapes: fiber families take Segment(L) (levels 0..L-1) or Cycle(m)
/// (levels mod m); line families take Segment(L) (positions 0..L-1) or
/// Cycle(m) (circulant on m vertices); ZxZ/ZsemiZ take Cycle(m) (torus,
/// both coordinates mod m); free products take Ball(r) only.
FiniteGraph build(const MarkedGroupSpec& spec, const InstanceShape& shape);

/// Ball of radius r in the word metric of left * right, vertices in
/// breadth-first order from the identity.  Throws std::length_error when the
/// ball exceeds vertex_cap.
FiniteGraph free_product_ball(const MarkedGroupSpec& left, const MarkedGroupSpec& right,
                              int r, int vertex_cap = 200000);

}  // namespace caygraph
