#include "bifnet/stats.hpp"

#include "bifnet/special.hpp"
#include "bifnet/spectral.hpp"

#include <Eigen/Cholesky>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace bifnet {

std::vector<double> zscore_series(const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("zscore_series: empty input");

  double sum = 0.0;
  std::size_t finite = 0;
  for (double v : values) {
    if (std::isfinite(v)) {
      sum += v;
      ++finite;
    }
  }
  std::vector<double> out(values.begin(), values.end());
  if (finite == 0) return out;

  const double mean = sum / static_cast<double>(finite);
  double ss = 0.0;
  for (double v : values) {
    if (std::isfinite(v)) ss += (v - mean) * (v - mean);
  }
  const double std_dev = std::sqrt(ss / static_cast<double>(finite));
  for (double& v : out) {
    if (!std::isfinite(v)) continue;
    v = std_dev < 1e-12 ? 0.0 : (v - mean) / std_dev;
  }
  return out;
}

HotellingResult hotelling_t2(const Matrix& a, const Matrix& b) {
  const Index na = a.rows();
  const Index nb = b.rows();
  const Index l = a.cols();
  if (l < 1 || b.cols() != l) throw std::invalid_argument("hotelling_t2: dimension mismatch");
  if (na < 1 || nb < 1 || na + nb - 2 < l) {
    throw std::invalid_argument("hotelling_t2: insufficient samples");
  }

  const Vector mean_a = a.colwise().mean();
  const Vector mean_b = b.colwise().mean();
  const Vector diff = mean_a - mean_b;

  HotellingResult r;
  if (diff.isZero(0.0)) {
    r.t2 = 0.0;
    r.f = 0.0;
    r.p = 1.0;
    return r;
  }

  const Matrix ca = a.rowwise() - mean_a.transpose();
  const Matrix cb = b.rowwise() - mean_b.transpose();
  Matrix pooled = (ca.transpose() * ca + cb.transpose() * cb) / static_cast<double>(na + nb - 2);

  const Vector ev = eigvals_sym(pooled);
  if (ev.minCoeff() <= 1e-12 * std::max(ev.maxCoeff(), 0.0)) {
    pooled += (1e-10 * pooled.trace() / static_cast<double>(l)) * Matrix::Identity(l, l);
    r.ridged = true;
  }

  Eigen::LLT<Matrix> llt(pooled);
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error("hotelling_t2: singular pooled covariance");
  }
  r.t2 = static_cast<double>(na) * static_cast<double>(nb) / static_cast<double>(na + nb) *
         diff.dot(llt.solve(diff));
  if (!(r.t2 >= 0.0)) throw std::runtime_error("hotelling_t2: singular pooled covariance");

  const double d2 = static_cast<double>(na + nb - l - 1);
  r.f = r.t2 * d2 / (static_cast<double>(na + nb - 2) * static_cast<double>(l));
  r.p = f_upper_tail(static_cast<double>(l), d2, r.f);
  return r;
}

BifurcationReport bifurcation_report(const std::vector<Matrix>& embeddings_a,
                                     const std::vector<Matrix>& embeddings_b,
                                     const std::vector<double>& entropy_a,
                                     const std::vector<double>& entropy_b,
                                     double threshold,
                                     const std::vector<long>* timestamps) {
  const std::size_t steps = embeddings_a.size();
  if (embeddings_b.size() != steps || entropy_a.size() != steps || entropy_b.size() != steps ||
      (timestamps != nullptr && timestamps->size() != steps)) {
    throw std::invalid_argument("bifurcation_report: input lengths differ");
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();

  BifurcationReport rep;
  rep.threshold = threshold;
  rep.timestamps.resize(steps);
  rep.t2.assign(steps, nan);
  rep.f.assign(steps, nan);
  rep.p.assign(steps, nan);
  for (std::size_t k = 0; k < steps; ++k) {
    rep.timestamps[k] = timestamps ? (*timestamps)[k] : static_cast<long>(k);
    try {
      const HotellingResult h = hotelling_t2(embeddings_a[k], embeddings_b[k]);
      rep.t2[k] = h.t2;
      rep.f[k] = h.f;
      rep.p[k] = h.p;
      if (h.ridged) {
        rep.warnings.push_back("t=" + std::to_string(rep.timestamps[k]) +
                               ": near-singular pooled covariance, ridge added");
      }
    } catch (const std::exception& e) {
      rep.warnings.push_back("t=" + std::to_string(rep.timestamps[k]) + ": " + e.what());
    }
    if (!rep.critical_time && std::isfinite(rep.p[k]) && rep.p[k] < threshold) {
      rep.critical_time = rep.timestamps[k];
    }
  }
  rep.z_entropy_a = zscore_series(entropy_a);
  rep.z_entropy_b = zscore_series(entropy_b);
  return rep;
}

}  // namespace bifnet
