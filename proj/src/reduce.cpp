#include "bifnet/reduce.hpp"

#include "bifnet/special.hpp"
#include "bifnet/spectral.hpp"

#include <Eigen/Cholesky>
#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>

namespace bifnet {

namespace {

void fix_loading_signs(Matrix& loadings) {
  for (Index k = 0; k < loadings.cols(); ++k) {
    Index arg = 0;
    loadings.col(k).cwiseAbs().maxCoeff(&arg);
    if (loadings(arg, k) < 0.0) loadings.col(k) = -loadings.col(k);
  }
}

Matrix standardize(const Matrix& x, const Vector& mean, const Vector& scale) {
  Matrix out = x.rowwise() - mean.transpose();
  for (Index j = 0; j < out.cols(); ++j) out.col(j) /= scale(j);
  return out;
}

}  // namespace

PcaModel fit_pca(const Matrix& samples, Index target_dim) {
  const Index rows = samples.rows();
  const Index p = samples.cols();
  if (target_dim < 1 || target_dim > p) {
    throw std::invalid_argument("fit_pca: target dimension must be in [1, columns]");
  }
  if (rows < 2) throw std::invalid_argument("fit_pca: needs at least 2 samples");

  PcaModel model;
  model.mean = samples.colwise().mean();
  Matrix centered = samples.rowwise() - model.mean.transpose();
  model.scale = (centered.array().square().colwise().mean()).sqrt();
  for (Index j = 0; j < p; ++j) {
    if (model.scale(j) < 1e-12) model.scale(j) = 1.0;  // constant column
    centered.col(j) /= model.scale(j);
  }

  Eigen::BDCSVD<Matrix> svd(centered, Eigen::ComputeFullV);
  model.loadings = svd.matrixV().leftCols(target_dim);
  fix_loading_signs(model.loadings);

  const Vector sv = svd.singularValues();
  const double total = sv.squaredNorm();
  model.explained_variance_ratio = Vector::Zero(target_dim);
  const Index avail = std::min(target_dim, sv.size());
  if (total > 0.0) {
    model.explained_variance_ratio.head(avail) = sv.head(avail).array().square() / total;
  }
  return model;
}

Matrix pca_transform(const PcaModel& model, const Matrix& x) {
  if (x.cols() != model.input_dim()) {
    throw std::invalid_argument("pca_transform: column count does not match the model");
  }
  return standardize(x, model.mean, model.scale) * model.loadings;
}

std::vector<int> mahalanobis_trim(const Matrix& y, double alpha, std::string* warning) {
  const Index n = y.rows();
  const Index l = y.cols();
  std::vector<int> all(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = static_cast<int>(i);

  if (n <= l) {
    if (warning) *warning = "mahalanobis_trim: too few samples, keeping all";
    return all;
  }
  const Vector mean = y.colwise().mean();
  const Matrix centered = y.rowwise() - mean.transpose();
  const Matrix cov = centered.transpose() * centered / static_cast<double>(n - 1);

  const Vector ev = eigvals_sym(cov);
  if (ev.minCoeff() <= 1e-12 * std::max(ev.maxCoeff(), 1e-30)) {
    if (warning) *warning = "mahalanobis_trim: singular sample covariance, keeping all";
    return all;
  }
  const Matrix cov_inv = cov.llt().solve(Matrix::Identity(l, l));
  const double cutoff = chi_squared_quantile(static_cast<double>(l), alpha);

  std::vector<int> keep;
  keep.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    const Vector r = centered.row(i).transpose();
    if (r.dot(cov_inv * r) <= cutoff) keep.push_back(static_cast<int>(i));
  }
  return keep;
}

Vector Ellipsoid::center() const {
  return q.llt().solve(b);
}

Ellipsoid fit_mve(const Matrix& points, double tol, int max_iter) {
  const Index n = points.rows();
  const Index d = points.cols();
  if (n < d + 1) throw std::runtime_error("fit_mve: rank-deficient point set");

  // Affine-hull rank check on centered points.
  {
    const Matrix centered = points.rowwise() - points.colwise().mean();
    Eigen::JacobiSVD<Matrix> svd(centered);
    const Vector sv = svd.singularValues();
    if (sv(d - 1) <= 1e-10 * std::max(sv(0), 1e-30)) {
      throw std::runtime_error("fit_mve: rank-deficient point set");
    }
  }

  // Khachiyan's ascent on the lifted points q_i = (x_i, 1).
  Matrix lifted(d + 1, n);
  lifted.topRows(d) = points.transpose();
  lifted.row(d).setOnes();

  Vector u = Vector::Constant(n, 1.0 / static_cast<double>(n));
  const double dim = static_cast<double>(d);
  for (int it = 0; it < max_iter; ++it) {
    const Matrix x = lifted * u.asDiagonal() * lifted.transpose();
    const Matrix x_inv = x.llt().solve(Matrix::Identity(d + 1, d + 1));
    Index j = 0;
    const double kappa = (x_inv * lifted).cwiseProduct(lifted).colwise().sum().maxCoeff(&j);
    if (kappa <= (dim + 1.0) * (1.0 + tol)) break;
    const double step = (kappa - dim - 1.0) / ((dim + 1.0) * (kappa - 1.0));
    u *= 1.0 - step;
    u(j) += step;
  }

  const Vector center = points.transpose() * u;
  const Matrix second_moment = points.transpose() * u.asDiagonal() * points;
  const Matrix sigma = second_moment - center * center.transpose();
  const Matrix shape = sigma.llt().solve(Matrix::Identity(d, d)) / dim;

  // Membership parameterization: Q = P^{1/2} (symmetric square root), b = Q c.
  const EigenDecomposition ed = eig_sym(shape);
  Ellipsoid e;
  e.q = ed.eigenvectors * ed.eigenvalues.cwiseMax(0.0).cwiseSqrt().asDiagonal() *
        ed.eigenvectors.transpose();
  e.b = e.q * center;

  // The ascent may stop short of full convergence; rescale so the farthest
  // point sits exactly on the boundary. Keeps the fit feasible without
  // giving up volume.
  double max_membership = 0.0;
  for (Index i = 0; i < n; ++i) {
    max_membership = std::max(max_membership, e.membership(points.row(i).transpose()));
  }
  if (max_membership > 0.0) {
    const double inflate = 1.0 / std::sqrt(max_membership);
    e.q *= inflate;
    e.b *= inflate;
  }
  return e;
}

std::vector<MveStep> mve_per_step(const std::vector<Matrix>& embeddings,
                                  const std::vector<long>& timestamps, double alpha) {
  if (embeddings.size() != timestamps.size()) {
    throw std::invalid_argument("mve_per_step: timestamp count mismatch");
  }
  std::vector<MveStep> out(embeddings.size());
  for (std::size_t k = 0; k < embeddings.size(); ++k) {
    MveStep& step = out[k];
    step.t = timestamps[k];
    std::string trim_warning;
    step.retained = mahalanobis_trim(embeddings[k], alpha, &trim_warning);
    if (!trim_warning.empty()) step.warning = trim_warning;
    Matrix kept(static_cast<Index>(step.retained.size()), embeddings[k].cols());
    for (std::size_t r = 0; r < step.retained.size(); ++r) {
      kept.row(static_cast<Index>(r)) = embeddings[k].row(step.retained[r]);
    }
    try {
      step.ellipsoid = fit_mve(kept);
    } catch (const std::exception& e) {
      step.ellipsoid.reset();
      step.warning = "t=" + std::to_string(step.t) + ": " + e.what();
    }
  }
  return out;
}

}  // namespace bifnet
