#include "bifnet/centrality.hpp"

#include "bifnet/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace bifnet {

Index FeatureConfig::column_count() const {
  Index p = 0;
  for (Feature f : features) {
    p += (f == Feature::HopWalk) ? static_cast<Index>(hop_depths.size()) : 1;
  }
  return p + static_cast<Index>(reference_nodes.size());
}

Vector degree(const Graph& g) { return g.degrees(); }

Vector eigenvector_centrality(const Graph& g) {
  if (g.edge_count() == 0) {
    throw std::runtime_error("eigenvector_centrality: graph has no edges");
  }
  return dominant_eigpair(g.weights()).vector;
}

Vector lfvc(const Graph& g) {
  const Vector f = fiedler_pair(laplacian(g)).vector;
  const Index n = g.size();
  Vector out = Vector::Zero(n);
  for (Index i = 0; i < n; ++i) {
    double acc = 0.0;
    for (Index j = 0; j < n; ++j) {
      if (g.weight(i, j) > 0.0) {
        const double diff = f(i) - f(j);
        acc += diff * diff;
      }
    }
    out(i) = acc;
  }
  return out;
}

Vector closeness(const Graph& g, PathMetric metric) {
  const Index n = g.size();
  Vector out = Vector::Zero(n);
  for (Index i = 0; i < n; ++i) {
    const ShortestPathTree t = shortest_paths(g, static_cast<int>(i), metric);
    double sum = 0.0;
    for (Index j = 0; j < n; ++j) {
      if (j != i && std::isfinite(t.dist(j))) sum += t.dist(j);
    }
    out(i) = sum > 0.0 ? 1.0 / sum : 0.0;
  }
  return out;
}

Vector betweenness(const Graph& g, PathMetric metric) {
  const Index n = g.size();
  Vector score = Vector::Zero(n);
  for (Index s = 0; s < n; ++s) {
    const ShortestPathTree t = shortest_paths(g, static_cast<int>(s), metric);
    Vector dependency = Vector::Zero(n);
    // Brandes back-propagation in reverse visit order.
    for (auto it = t.visit_order.rbegin(); it != t.visit_order.rend(); ++it) {
      const int w = *it;
      for (int v : t.predecessors[static_cast<std::size_t>(w)]) {
        dependency(v) += t.path_counts(v) / t.path_counts(w) * (1.0 + dependency(w));
      }
      if (w != s) score(w) += dependency(w);
    }
  }
  // Each unordered pair was accumulated from both endpoints.
  return score / 2.0;
}

Vector local_clustering(const Graph& g) {
  const Index n = g.size();
  Vector out = Vector::Zero(n);
  std::vector<Index> nbrs;
  for (Index i = 0; i < n; ++i) {
    nbrs.clear();
    for (Index j = 0; j < n; ++j) {
      if (g.weight(i, j) > 0.0) nbrs.push_back(j);
    }
    const std::size_t k = nbrs.size();
    if (k < 2) continue;
    Index links = 0;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        if (g.weight(nbrs[a], nbrs[b]) > 0.0) ++links;
      }
    }
    out(i) = static_cast<double>(links) / (0.5 * static_cast<double>(k) * static_cast<double>(k - 1));
  }
  return out;
}

Vector hop_walk_weights(const Graph& g, int h) {
  if (h < 1) throw std::invalid_argument("hop_walk_weights: depth must be >= 1");
  Vector v = Vector::Ones(g.size());
  for (int step = 0; step < h; ++step) v = g.weights() * v;
  return v;
}

Matrix reference_distances(const Graph& g, const std::vector<int>& refs, PathMetric metric) {
  if (refs.empty()) throw std::invalid_argument("reference_distances: empty reference set");
  const Index n = g.size();
  Matrix out(n, static_cast<Index>(refs.size()));
  for (std::size_t k = 0; k < refs.size(); ++k) {
    if (refs[k] < 0 || refs[k] >= n) {
      throw std::invalid_argument("reference_distances: reference node out of range");
    }
    out.col(static_cast<Index>(k)) = shortest_paths(g, refs[k], metric).dist;
  }
  double max_finite = 0.0;
  for (Index i = 0; i < out.rows(); ++i) {
    for (Index j = 0; j < out.cols(); ++j) {
      if (std::isfinite(out(i, j))) max_finite = std::max(max_finite, out(i, j));
    }
  }
  const double sentinel = static_cast<double>(n) * max_finite;
  out = out.unaryExpr([sentinel](double d) { return std::isfinite(d) ? d : sentinel; });
  return out;
}

FeatureMatrix feature_matrix(const Graph& g, const FeatureConfig& cfg, long t) {
  for (int h : cfg.hop_depths) {
    if (h < 1) throw std::invalid_argument("feature_matrix: hop depth must be >= 1");
  }
  for (int r : cfg.reference_nodes) {
    if (r < 0 || r >= g.size()) {
      throw std::invalid_argument("feature_matrix: reference node out of range");
    }
  }

  FeatureMatrix fm;
  fm.t = t;
  fm.values.resize(g.size(), cfg.column_count());
  Index col = 0;
  auto emit = [&](const std::string& name, auto&& compute) {
    fm.feature_names.push_back(name);
    try {
      fm.values.col(col) = compute();
    } catch (const std::exception& e) {
      fm.values.col(col).setZero();
      fm.warnings.push_back("t=" + std::to_string(t) + " " + name + ": " + e.what());
    }
    ++col;
  };

  for (Feature f : cfg.features) {
    switch (f) {
      case Feature::Degree:
        emit("degree", [&] { return degree(g); });
        break;
      case Feature::Eigenvector:
        emit("eigenvector", [&] { return eigenvector_centrality(g); });
        break;
      case Feature::Lfvc:
        emit("lfvc", [&] { return lfvc(g); });
        break;
      case Feature::Closeness:
        emit("closeness", [&] { return closeness(g, cfg.metric); });
        break;
      case Feature::Betweenness:
        emit("betweenness", [&] { return betweenness(g, cfg.metric); });
        break;
      case Feature::Lcc:
        emit("lcc", [&] { return local_clustering(g); });
        break;
      case Feature::HopWalk:
        for (int h : cfg.hop_depths) {
          emit("hopwalk_h" + std::to_string(h), [&] { return hop_walk_weights(g, h); });
        }
        break;
    }
  }
  for (std::size_t k = 0; k < cfg.reference_nodes.size(); ++k) {
    const int ref = cfg.reference_nodes[k];
    emit("refdist_" + std::to_string(ref), [&] {
      return Vector(reference_distances(g, {ref}, cfg.metric).col(0));
    });
  }
  return fm;
}

}  // namespace bifnet
