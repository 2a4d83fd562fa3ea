#pragma once

#include "bifnet/graph.hpp"
#include "bifnet/types.hpp"

#include <string>
#include <vector>

namespace bifnet {

enum class Feature {
  Degree,
  Eigenvector,
  Lfvc,
  Closeness,
  Betweenness,
  Lcc,
  HopWalk,
};

/// Which per-node features go into the feature matrix, in column order.
/// HopWalk expands to one column per entry of hop_depths; reference nodes
/// add one distance column each.
struct FeatureConfig {
  std::vector<Feature> features = {Feature::Degree,     Feature::Eigenvector,
                                   Feature::Lfvc,       Feature::Closeness,
                                   Feature::Betweenness, Feature::Lcc,
                                   Feature::HopWalk};
  std::vector<int> hop_depths = {2, 3};
  std::vector<int> reference_nodes = {};
  PathMetric metric = PathMetric::Hop;

  Index column_count() const;
};

struct FeatureMatrix {
  Matrix values;  // n x p
  std::vector<std::string> feature_names;
  long t = 0;
  std::vector<std::string> warnings;
};

Vector degree(const Graph& g);

/// Perron vector of the adjacency matrix; entries >= 0, unit norm.
/// Throws on an edgeless graph.
Vector eigenvector_centrality(const Graph& g);

/// LFVC(i) = sum over incident edges (i,j) of (f_i - f_j)^2 with f the
/// Fiedler vector. Throws when no Fiedler pair exists (edgeless graph).
Vector lfvc(const Graph& g);

/// Clos(i) = 1 / sum of distances to reachable nodes; 0 for nodes with no
/// reachable peer.
Vector closeness(const Graph& g, PathMetric metric = PathMetric::Hop);

/// Unnormalized shortest-path betweenness over unordered node pairs,
/// computed by Brandes accumulation.
Vector betweenness(const Graph& g, PathMetric metric = PathMetric::Hop);

/// Local clustering coefficient; 0 for nodes with fewer than 2 neighbors.
Vector local_clustering(const Graph& g);

/// Entry i = [W^h 1]_i, the total weight of h-edge walks leaving node i.
/// h = 1 reduces exactly to degree.
Vector hop_walk_weights(const Graph& g, int h);

/// Column k holds distances from reference_nodes[k] to every node;
/// unreachable entries are replaced by n * (max finite distance observed).
Matrix reference_distances(const Graph& g, const std::vector<int>& refs,
                           PathMetric metric = PathMetric::Hop);

/// Assembles the configured features into an n x p matrix. A feature that
/// fails on a degenerate snapshot contributes an all-zero column and a
/// warning instead of aborting.
FeatureMatrix feature_matrix(const Graph& g, const FeatureConfig& cfg = {}, long t = 0);

}  // namespace bifnet
