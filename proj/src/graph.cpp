#include "caygraph/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace caygraph {

InstanceShape InstanceShape::segment(int L) {
  if (L < 2) throw std::invalid_argument("segment length must be >= 2");
  return {Kind::Segment, L};
}

InstanceShape InstanceShape::cycle(int m) {
  if (m < 3) throw std::invalid_argument("cycle modulus must be >= 3");
  return {Kind::Cycle, m};
}

InstanceShape InstanceShape::ball(int r) {
  if (r < 0) throw std::invalid_argument("ball radius must be >= 0");
  return {Kind::Ball, r};
}

std::string InstanceShape::name() const {
  switch (kind) {
    case Kind::Segment: return "segment:" + std::to_string(param);
    case Kind::Cycle: return "cycle:" + std::to_string(param);
    case Kind::Ball: return "ball:" + std::to_string(param);
  }
  return "?";
}

FiniteGraph FiniteGraph::raw(int n, const std::vector<std::pair<int, int>>& edges) {
  FiniteGraph g;
  for (int v = 0; v < n; ++v) g.add_vertex(GroupElement::line(v));
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  g.finalize();
  return g;
}

void FiniteGraph::add_vertex(GroupElement label) {
  if (finalized_) throw std::logic_error("graph is immutable after finalize");
  index_.emplace(label, n());
  labels_.push_back(std::move(label));
  adj_.emplace_back();
}

void FiniteGraph::add_edge(int u, int v) {
  if (finalized_) throw std::logic_error("graph is immutable after finalize");
  if (u < 0 || v < 0 || u >= n() || v >= n()) throw std::out_of_range("edge endpoint");
  if (u == v) throw std::invalid_argument("self loops are not allowed");
  if (!matrix_.empty()) throw std::logic_error("add_edge after finalize");
  adj_[u].push_back(v);
  adj_[v].push_back(u);
}

void FiniteGraph::finalize() {
  const std::size_t nn = static_cast<std::size_t>(n());
  for (auto& l : adj_) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  matrix_.assign((nn * nn + 63) / 64, 0);
  for (int u = 0; u < n(); ++u)
    for (int v : adj_[u]) {
      std::size_t bit = static_cast<std::size_t>(u) * nn + static_cast<std::size_t>(v);
      matrix_[bit / 64] |= 1ULL << (bit % 64);
    }
  finalized_ = true;
}

bool FiniteGraph::adjacent(int u, int v) const {
  if (u == v) return false;
  std::size_t bit = static_cast<std::size_t>(u) * static_cast<std::size_t>(n()) +
                    static_cast<std::size_t>(v);
  return (matrix_[bit / 64] >> (bit % 64)) & 1ULL;
}

int FiniteGraph::edge_count() const {
  int total = 0;
  for (const auto& l : adj_) total += static_cast<int>(l.size());
  return total / 2;
}

int FiniteGraph::index_of(const GroupElement& g) const {
  auto it = index_.find(g);
  return it == index_.end() ? -1 : it->second;
}

int FiniteGraph::levels() const {
  if (layout_ != Layout::FiberGrid && layout_ != Layout::Torus)
    throw std::domain_error("levels(): not a leveled graph");
  return levels_;
}

int FiniteGraph::fiber_k() const {
  if (layout_ != Layout::FiberGrid && layout_ != Layout::Torus)
    throw std::domain_error("fiber_k(): not a leveled graph");
  return fiber_;
}

int FiniteGraph::vertex_at(std::int64_t i, std::int64_t level) const {
  const int k = fiber_k();
  std::int64_t ii = ((i % k) + k) % k;
  std::int64_t ll = level;
  if (wraps_) ll = ((level % levels_) + levels_) % levels_;
  if (ll < 0 || ll >= levels_) return -1;
  return static_cast<int>(ll) * k + static_cast<int>(ii);
}

int FiniteGraph::level_of(int v) const { return v / fiber_k(); }

std::int64_t FiniteGraph::offset_of(int v) const { return v % fiber_k(); }

std::int64_t FiniteGraph::position_of(int v) const {
  if (layout_ != Layout::Line) throw std::domain_error("position_of(): not a line graph");
  return v;
}

int FiniteGraph::vertex_at_pos(std::int64_t pos) const {
  if (layout_ != Layout::Line) throw std::domain_error("vertex_at_pos(): not a line graph");
  if (wraps_) return static_cast<int>(((pos % n()) + n()) % n());
  return (pos >= 0 && pos < n()) ? static_cast<int>(pos) : -1;
}

bool FiniteGraph::interior(int v) const {
  if (full_degree_ < 0) return true;
  return degree(v) == full_degree_;
}

int path_distance(const FiniteGraph& g, int u, int v) {
  if (u == v) return 0;
  std::vector<int> dist(static_cast<std::size_t>(g.n()), kUnreachable);
  std::queue<int> q;
  dist[u] = 0;
  q.push(u);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : g.neighbors(x)) {
      if (dist[y] != kUnreachable) continue;
      dist[y] = dist[x] + 1;
      if (y == v) return dist[y];
      q.push(y);
    }
  }
  return kUnreachable;
}

std::vector<int> bfs_distances(const FiniteGraph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.n()), kUnreachable);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : g.neighbors(x)) {
      if (dist[y] != kUnreachable) continue;
      dist[y] = dist[x] + 1;
      q.push(y);
    }
  }
  return dist;
}

}  // namespace caygraph
