#pragma once

#include "bifnet/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bifnet {

// (v - mean) / population std. Constant series (std < 1e-12) map to all zeros.
// Non-finite entries are excluded from the moments and passed through unchanged.
std::vector<double> zscore_series(const std::vector<double>& values);

struct HotellingResult {
  double t2 = 0.0;
  double f = 0.0;
  double p = 1.0;
  bool ridged = false;
};

// Two-sample test of equal means; rows are samples, columns the l variates.
// T^2 = (n_a n_b / (n_a + n_b)) * d' S_pooled^-1 d with d the mean difference,
// F = T^2 * (n_a + n_b - l - 1) / ((n_a + n_b - 2) l), p the upper tail of
// F(l, n_a + n_b - l - 1). A near-singular pooled covariance gets a ridge of
// 1e-10 * trace / l and sets `ridged`.
HotellingResult hotelling_t2(const Matrix& a, const Matrix& b);

struct BifurcationReport {
  std::vector<long> timestamps;
  std::vector<double> t2;  // NaN where the per-step test failed
  std::vector<double> f;
  std::vector<double> p;
  std::vector<double> z_entropy_a;
  std::vector<double> z_entropy_b;
  std::optional<long> critical_time;  // first timestamp with p < threshold
  double threshold = 0.01;
  std::vector<std::string> warnings;
};

// Per-step Hotelling tests between two embedding-cloud sequences plus
// Z-scored entropy series. Failed steps carry NaN statistics and a warning
// and are skipped when scanning for the critical time. `timestamps` defaults
// to 0..T-1 when null.
BifurcationReport bifurcation_report(const std::vector<Matrix>& embeddings_a,
                                     const std::vector<Matrix>& embeddings_b,
                                     const std::vector<double>& entropy_a,
                                     const std::vector<double>& entropy_b,
                                     double threshold = 0.01,
                                     const std::vector<long>* timestamps = nullptr);

}  // namespace bifnet
