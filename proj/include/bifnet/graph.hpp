#pragma once

#include "bifnet/types.hpp"

#include <utility>
#include <vector>

namespace bifnet {

struct Edge {
  int u = 0;
  int v = 0;
  double w = 1.0;
};

/// Undirected weighted graph over a fixed node set, stored as a dense
/// symmetric nonnegative weight matrix with zero diagonal. Immutable after
/// construction; all free functions over it are pure.
class Graph {
 public:
  /// Graph with n nodes and no edges.
  explicit Graph(Index n);

  /// Takes ownership of a weight matrix. Requires symmetry (within 1e-12
  /// relative), zero diagonal, and nonnegative entries; the upper triangle
  /// is mirrored so the stored matrix is exactly symmetric.
  Graph(Index n, Matrix weights);

  static Graph from_edges(Index n, const std::vector<Edge>& edges);

  Index size() const { return n_; }
  Index edge_count() const { return m_; }
  const Matrix& weights() const { return w_; }
  double weight(Index i, Index j) const { return w_(i, j); }
  bool has_edge(Index i, Index j) const { return w_(i, j) > 0.0; }

  /// Strictly-positive upper-triangular entries as (u, v) pairs, u < v.
  std::vector<std::pair<int, int>> edges() const;

  /// Total incident weight per node (row sums of W).
  Vector degrees() const { return w_.rowwise().sum(); }

 private:
  Index n_;
  Matrix w_;
  Index m_;
};

/// Ordered, timestamped list of graphs over one shared node set.
class TemporalSequence {
 public:
  TemporalSequence(std::vector<Graph> graphs, std::vector<long> timestamps);

  std::size_t length() const { return graphs_.size(); }
  Index node_count() const { return graphs_.front().size(); }
  const Graph& at(std::size_t k) const { return graphs_[k]; }
  long timestamp(std::size_t k) const { return timestamps_[k]; }
  const std::vector<Graph>& graphs() const { return graphs_; }
  const std::vector<long>& timestamps() const { return timestamps_; }

 private:
  std::vector<Graph> graphs_;
  std::vector<long> timestamps_;
};

/// L = D - W together with the degree vector d = W 1.
struct LaplacianView {
  Matrix matrix;
  Vector degrees;
};

LaplacianView laplacian(const Graph& g);

/// Partition of node indices into connected components (positive-weight
/// paths). Blocks are sorted internally and by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

enum class PathMetric {
  Hop,            // every positive-weight edge has length 1
  InverseWeight,  // edge length 1 / W(i, j)
};

/// Single-source shortest paths with exact path counting.
struct ShortestPathTree {
  Vector dist;         // +inf for unreachable nodes
  Vector path_counts;  // number of distinct shortest paths from the source
  std::vector<std::vector<int>> predecessors;
  std::vector<int> visit_order;  // reachable nodes by nondecreasing distance
};

ShortestPathTree shortest_paths(const Graph& g, int source,
                                PathMetric metric = PathMetric::Hop);

}  // namespace bifnet
