#include "bifnet/entropy.hpp"

#include "bifnet/parallel.hpp"
#include "bifnet/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace bifnet {

namespace {

// Unit-trace spectrum of L_c = L / trace(L), ascending. Eigenvalues below
// the zero cutoff are structural zeros (one per connected component) and are
// snapped to exactly 0; the rest are renormalized so the result is exactly a
// probability distribution. Values below -1e-10 indicate a broken input.
struct ScaledSpectrum {
  Vector values;
  double scale = 0.0;
  int positive_count = 0;
};

ScaledSpectrum scaled_spectrum(const Graph& g) {
  const LaplacianView lap = laplacian(g);
  const double trace = lap.degrees.sum();
  if (trace <= 0.0) throw std::runtime_error("vnge: zero-trace Laplacian");
  // Eigendecompose L_c itself: scaling W by a power of two then leaves every
  // entry of L_c bit-identical, so V is scale invariant without tolerance.
  Vector lambda = eigvals_sym(Matrix(lap.matrix / trace));
  const double cutoff = zero_threshold(lambda);
  double positive_sum = 0.0;
  int n_plus = 0;
  for (Index i = 0; i < lambda.size(); ++i) {
    if (lambda(i) < -1e-10) {
      throw std::runtime_error("vnge: Laplacian spectrum is not positive semidefinite");
    }
    if (lambda(i) < cutoff) {
      lambda(i) = 0.0;
    } else {
      positive_sum += lambda(i);
      ++n_plus;
    }
  }
  if (n_plus == 0) throw std::runtime_error("vnge: no nonzero eigenvalue");
  lambda /= positive_sum;
  return ScaledSpectrum{std::move(lambda), 1.0 / trace, n_plus};
}

EntropyBounds bounds_from(const Vector& spectrum, int positive_count, double q) {
  if (positive_count < 2) {
    throw std::runtime_error("vnge_bounds: needs at least two nonzero eigenvalues");
  }
  double lambda_min = kInfinity;
  double lambda_max = 0.0;
  for (Index i = 0; i < spectrum.size(); ++i) {
    if (spectrum(i) > 0.0) {
      lambda_min = std::min(lambda_min, spectrum(i));
      lambda_max = std::max(lambda_max, spectrum(i));
    }
  }
  return EntropyBounds{-q * std::log(lambda_max) / (1.0 - lambda_min),
                       -q * std::log(lambda_min) / (1.0 - lambda_max)};
}

}  // namespace

SpectrumEntropy vnge_exact(const Graph& g) {
  ScaledSpectrum s = scaled_spectrum(g);
  double v = 0.0;
  for (Index i = 0; i < s.values.size(); ++i) {
    const double x = s.values(i);
    if (x > 0.0) v -= x * std::log(x);
  }
  if (v < 0.0) v = 0.0;  // noise from a spectrum at a pure state
  return SpectrumEntropy{v, std::move(s.values), s.scale, s.positive_count};
}

double vnge_approx(const Graph& g) {
  const Matrix& w = g.weights();
  const Vector d = w.rowwise().sum();
  const double trace = d.sum();
  if (trace <= 0.0) throw std::runtime_error("vnge: zero-trace Laplacian");
  const double quad = d.squaredNorm() + w.array().square().sum();
  return 1.0 - quad / (trace * trace);
}

EntropyBounds vnge_bounds(const Graph& g) {
  const ScaledSpectrum s = scaled_spectrum(g);
  return bounds_from(s.values, s.positive_count, vnge_approx(g));
}

std::vector<EntropyResult> entropy_series(const TemporalSequence& seq, EntropyMode mode,
                                          int threads) {
  std::vector<EntropyResult> out(seq.length());
  parallel_for(static_cast<int>(seq.length()), threads, [&](int k) {
    const Graph& g = seq.at(static_cast<std::size_t>(k));
    EntropyResult& r = out[static_cast<std::size_t>(k)];
    if (g.edge_count() == 0) {
      r.warning = "t=" + std::to_string(seq.timestamp(static_cast<std::size_t>(k))) +
                  ": empty snapshot, entropy undefined";
      return;
    }
    r.scale = 1.0 / g.degrees().sum();
    if (mode != EntropyMode::Exact) {
      r.approx = vnge_approx(g);
    }
    if (mode != EntropyMode::Approx) {
      const SpectrumEntropy se = vnge_exact(g);
      r.exact = se.value;
      r.positive_count = se.positive_count;
      if (se.positive_count >= 2) {
        const EntropyBounds b = bounds_from(se.spectrum, se.positive_count, vnge_approx(g));
        r.lower = b.lower;
        r.upper = b.upper;
      }
    }
  });
  return out;
}

}  // namespace bifnet
