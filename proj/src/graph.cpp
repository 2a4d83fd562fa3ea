#include "bifnet/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace bifnet {

namespace {

Index count_edges(const Matrix& w) {
  Index m = 0;
  for (Index i = 0; i < w.rows(); ++i) {
    for (Index j = i + 1; j < w.cols(); ++j) {
      if (w(i, j) > 0.0) ++m;
    }
  }
  return m;
}

}  // namespace

Graph::Graph(Index n) : n_(n), w_(Matrix::Zero(n, n)), m_(0) {
  if (n < 1) throw std::invalid_argument("Graph: node count must be >= 1");
}

Graph::Graph(Index n, Matrix weights) : n_(n), w_(std::move(weights)) {
  if (n < 1) throw std::invalid_argument("Graph: node count must be >= 1");
  if (w_.rows() != n || w_.cols() != n) {
    throw std::invalid_argument("Graph: weight matrix shape does not match node count");
  }
  const double scale = std::max(1.0, w_.cwiseAbs().maxCoeff());
  for (Index i = 0; i < n; ++i) {
    if (w_(i, i) != 0.0) throw std::invalid_argument("Graph: nonzero diagonal entry");
    for (Index j = i + 1; j < n; ++j) {
      if (std::abs(w_(i, j) - w_(j, i)) > 1e-12 * scale) {
        throw std::invalid_argument("Graph: weight matrix is not symmetric");
      }
      if (w_(i, j) < 0.0 || w_(j, i) < 0.0) {
        throw std::invalid_argument("Graph: negative edge weight");
      }
      w_(j, i) = w_(i, j);  // enforce exact symmetry
    }
  }
  m_ = count_edges(w_);
}

Graph Graph::from_edges(Index n, const std::vector<Edge>& edges) {
  Matrix w = Matrix::Zero(n, n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw std::invalid_argument("Graph: edge endpoint out of range");
    }
    if (e.u == e.v) throw std::invalid_argument("Graph: self-loop");
    if (e.w < 0.0) throw std::invalid_argument("Graph: negative edge weight");
    w(e.u, e.v) = e.w;
    w(e.v, e.u) = e.w;
  }
  return Graph(n, std::move(w));
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Index i = 0; i < n_; ++i) {
    for (Index j = i + 1; j < n_; ++j) {
      if (w_(i, j) > 0.0) out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return out;
}

TemporalSequence::TemporalSequence(std::vector<Graph> graphs, std::vector<long> timestamps)
    : graphs_(std::move(graphs)), timestamps_(std::move(timestamps)) {
  if (graphs_.empty()) throw std::invalid_argument("TemporalSequence: no snapshots");
  if (graphs_.size() != timestamps_.size()) {
    throw std::invalid_argument("TemporalSequence: timestamp count mismatch");
  }
  const Index n = graphs_.front().size();
  for (const Graph& g : graphs_) {
    if (g.size() != n) {
      throw std::invalid_argument("TemporalSequence: snapshots must share one node set");
    }
  }
  for (std::size_t k = 1; k < timestamps_.size(); ++k) {
    if (timestamps_[k] <= timestamps_[k - 1]) {
      throw std::invalid_argument("TemporalSequence: timestamps must be strictly increasing");
    }
  }
}

LaplacianView laplacian(const Graph& g) {
  LaplacianView lap;
  lap.degrees = g.weights().rowwise().sum();
  lap.matrix = Matrix(lap.degrees.asDiagonal());
  lap.matrix -= g.weights();
  return lap;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const Index n = g.size();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> blocks;
  for (Index s = 0; s < n; ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(blocks.size());
    blocks.emplace_back();
    std::deque<Index> queue{s};
    label[static_cast<std::size_t>(s)] = id;
    while (!queue.empty()) {
      const Index u = queue.front();
      queue.pop_front();
      blocks[static_cast<std::size_t>(id)].push_back(static_cast<int>(u));
      for (Index v = 0; v < n; ++v) {
        if (g.weight(u, v) > 0.0 && label[static_cast<std::size_t>(v)] < 0) {
          label[static_cast<std::size_t>(v)] = id;
          queue.push_back(v);
        }
      }
    }
  }
  for (auto& block : blocks) std::sort(block.begin(), block.end());
  return blocks;
}

namespace {

ShortestPathTree bfs_paths(const Graph& g, int source) {
  const Index n = g.size();
  ShortestPathTree t;
  t.dist = Vector::Constant(n, kInfinity);
  t.path_counts = Vector::Zero(n);
  t.predecessors.assign(static_cast<std::size_t>(n), {});
  t.dist(source) = 0.0;
  t.path_counts(source) = 1.0;
  std::deque<Index> queue{source};
  while (!queue.empty()) {
    const Index u = queue.front();
    queue.pop_front();
    t.visit_order.push_back(static_cast<int>(u));
    for (Index v = 0; v < n; ++v) {
      if (g.weight(u, v) <= 0.0) continue;
      if (std::isinf(t.dist(v))) {
        t.dist(v) = t.dist(u) + 1.0;
        queue.push_back(v);
      }
      if (t.dist(v) == t.dist(u) + 1.0) {
        t.path_counts(v) += t.path_counts(u);
        t.predecessors[static_cast<std::size_t>(v)].push_back(static_cast<int>(u));
      }
    }
  }
  return t;
}

ShortestPathTree dijkstra_paths(const Graph& g, int source) {
  const Index n = g.size();
  ShortestPathTree t;
  t.dist = Vector::Constant(n, kInfinity);
  t.path_counts = Vector::Zero(n);
  t.predecessors.assign(static_cast<std::size_t>(n), {});
  t.dist(source) = 0.0;
  t.path_counts(source) = 1.0;

  using Entry = std::pair<double, Index>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
  heap.emplace(0.0, source);
  std::vector<bool> settled(static_cast<std::size_t>(n), false);
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (settled[static_cast<std::size_t>(u)]) continue;
    settled[static_cast<std::size_t>(u)] = true;
    t.visit_order.push_back(static_cast<int>(u));
    for (Index v = 0; v < n; ++v) {
      const double w = g.weight(u, v);
      if (w <= 0.0 || settled[static_cast<std::size_t>(v)]) continue;
      const double cand = d + 1.0 / w;
      if (cand < t.dist(v)) {
        t.dist(v) = cand;
        t.path_counts(v) = t.path_counts(u);
        t.predecessors[static_cast<std::size_t>(v)] = {static_cast<int>(u)};
        heap.emplace(cand, v);
      } else if (cand == t.dist(v)) {
        t.path_counts(v) += t.path_counts(u);
        t.predecessors[static_cast<std::size_t>(v)].push_back(static_cast<int>(u));
      }
    }
  }
  return t;
}

}  // namespace

ShortestPathTree shortest_paths(const Graph& g, int source, PathMetric metric) {
  if (source < 0 || source >= g.size()) {
    throw std::invalid_argument("shortest_paths: source out of range");
  }
  return metric == PathMetric::Hop ? bfs_paths(g, source) : dijkstra_paths(g, source);
}

}  // namespace bifnet
