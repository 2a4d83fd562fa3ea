#pragma once

#include "bifnet/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bifnet {

/// Column-standardized PCA model. Loadings are the top right singular
/// directions of the standardized sample matrix, orthonormal, with a
/// deterministic sign convention.
struct PcaModel {
  Vector mean;                       // length p
  Vector scale;                      // length p, 1 for constant columns
  Matrix loadings;                   // p x l
  Vector explained_variance_ratio;   // length l, descending

  Index input_dim() const { return loadings.rows(); }
  Index output_dim() const { return loadings.cols(); }
};

/// Fits PCA on a samples-by-features matrix (one row per observation).
/// Requires target_dim <= columns and at least 2 rows.
PcaModel fit_pca(const Matrix& samples, Index target_dim);

/// Projects rows of x through the model: standardized(x) * loadings.
Matrix pca_transform(const PcaModel& model, const Matrix& x);

/// Indices whose squared Mahalanobis distance from the sample mean is within
/// the chi-squared alpha-quantile (l degrees of freedom). A degenerate
/// sample covariance returns every index and sets *warning.
std::vector<int> mahalanobis_trim(const Matrix& y, double alpha = 0.975,
                                  std::string* warning = nullptr);

/// Covering ellipsoid in the membership form |Q x - b| <= 1, with derived
/// shape P = Q^2 and center c = Q^{-1} b.
struct Ellipsoid {
  Matrix q;
  Vector b;

  Matrix shape() const { return q * q; }
  Vector center() const;
  /// Squared membership value |Q x - b|^2; inside means <= 1.
  double membership(const Vector& x) const { return (q * x - b).squaredNorm(); }
};

/// Minimum-volume covering ellipsoid of the rows of `points`, by Khachiyan
/// barycentric coordinate ascent. Requires a full-dimensional affine hull
/// (throws "rank-deficient point set" otherwise).
Ellipsoid fit_mve(const Matrix& points, double tol = 1e-6, int max_iter = 10000);

struct MveStep {
  long t = 0;
  std::optional<Ellipsoid> ellipsoid;
  std::vector<int> retained;  // indices kept by the trim
  std::string warning;        // nonempty on a gap entry
};

/// Per-step pipeline: Mahalanobis trim then MVE fit. Degenerate steps yield
/// gap entries with warnings rather than failures.
std::vector<MveStep> mve_per_step(const std::vector<Matrix>& embeddings,
                                  const std::vector<long>& timestamps, double alpha = 0.975);

}  // namespace bifnet
