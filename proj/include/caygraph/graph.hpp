#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "caygraph/group.hpp"

namespace caygraph {

/// Finite stand-ins for one connected piece of a shift/Cayley graph.
struct InstanceShape {
  enum class Kind { Segment, Cycle, Ball };
  Kind kind = Kind::Segment;
  int param = 0;  // L for Segment (>=2), m for Cycle (>=3), r for Ball (>=0)

  static InstanceShape segment(int L);
  static InstanceShape cycle(int m);
  static InstanceShape ball(int r);
  std::string name() const;
  bool operator==(const InstanceShape&) const = default;
};

/// Immutable vertex-labeled symmetric irreflexive graph.
///
/// Vertex indexing is deterministic and documented per family:
/// fiber families are level-major (index = level*k + i), line families are
/// indexed by line position, the torus families by level*m + a, and
/// free-product balls in breadth-first order from the identity.
class FiniteGraph {
 public:
  enum class Layout { FiberGrid, Line, Torus, Irregular };

  FiniteGraph() = default;

  /// Plain graph for tests and ad-hoc experiments; labels default to line
  /// positions 0..n-1.
  static FiniteGraph raw(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return static_cast<int>(adj_.size()); }
  bool adjacent(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int edge_count() const;

  const GroupElement& label(int v) const { return labels_[v]; }
  /// Index of the vertex with the given label, or -1.
  int index_of(const GroupElement& g) const;

  const std::optional<MarkedGroupSpec>& spec() const { return spec_; }
  const std::optional<InstanceShape>& shape() const { return shape_; }
  Layout layout() const { return layout_; }
  bool wraps() const { return wraps_; }
  /// Set when a Cycle quotient is below the canonical threshold, so the
  /// finite graph may not be a faithful window of the Cayley graph.
  bool degenerate_quotient() const { return degenerate_; }

  // FiberGrid / Torus accessors.
  int levels() const;
  int fiber_k() const;
  int vertex_at(std::int64_t i, std::int64_t level) const;
  int level_of(int v) const;
  std::int64_t offset_of(int v) const;

  // Line accessors.
  std::int64_t position_of(int v) const;
  int vertex_at_pos(std::int64_t pos) const;

  /// True when every group-law neighbor of the vertex lies in the window.
  bool interior(int v) const;

  // Mutating interface used by the builders (graphs are immutable afterwards).
  void add_vertex(GroupElement label);
  void add_edge(int u, int v);
  void finalize();

  void set_spec(MarkedGroupSpec s) { spec_ = std::move(s); }
  void set_shape(InstanceShape s) { shape_ = s; }
  void set_layout(Layout l, int levels, int fiber, bool wraps) {
    layout_ = l;
    levels_ = levels;
    fiber_ = fiber;
    wraps_ = wraps;
  }
  void set_degenerate(bool d) { degenerate_ = d; }
  void set_full_degree(int d) { full_degree_ = d; }

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint64_t> matrix_;  // n*n bit matrix, row-major
  std::vector<GroupElement> labels_;
  std::unordered_map<GroupElement, int, GroupElementHash> index_;
  std::optional<MarkedGroupSpec> spec_;
  std::optional<InstanceShape> shape_;
  Layout layout_ = Layout::Irregular;
  int levels_ = 0;
  int fiber_ = 0;
  int full_degree_ = -1;
  bool wraps_ = false;
  bool degenerate_ = false;
  bool finalized_ = false;
};

constexpr int kUnreachable = -1;

/// Length of the shortest path between u and v (BFS), kUnreachable if none.
int path_distance(const FiniteGraph& g, int u, int v);

/// BFS distances from a source vertex; kUnreachable where disconnected.
std::vector<int> bfs_distances(const FiniteGraph& g, int source);

}  // namespace caygraph
