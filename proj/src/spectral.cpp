#include "bifnet/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <atomic>
#include <cmath>
#include <stdexcept>

namespace bifnet {

namespace {

std::atomic<long> g_eig_count{0};

void require_symmetric(const Matrix& a, const char* where) {
  if (a.rows() != a.cols()) throw std::invalid_argument(std::string(where) + ": matrix not square");
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
    throw std::invalid_argument(std::string(where) + ": matrix not symmetric");
  }
}

// Flip each column so its largest-magnitude entry (first such index on ties)
// is positive.
void fix_signs(Matrix& vectors) {
  for (Index k = 0; k < vectors.cols(); ++k) {
    Index arg = 0;
    vectors.col(k).cwiseAbs().maxCoeff(&arg);
    if (vectors(arg, k) < 0.0) vectors.col(k) = -vectors.col(k);
  }
}

}  // namespace

EigenDecomposition eig_sym(const Matrix& a) {
  require_symmetric(a, "eig_sym");
  g_eig_count.fetch_add(1, std::memory_order_relaxed);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eig_sym: solver failed");
  EigenDecomposition out{solver.eigenvalues(), solver.eigenvectors()};
  fix_signs(out.eigenvectors);
  return out;
}

Vector eigvals_sym(const Matrix& a) {
  require_symmetric(a, "eigvals_sym");
  g_eig_count.fetch_add(1, std::memory_order_relaxed);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigvals_sym: solver failed");
  return solver.eigenvalues();
}

double zero_threshold(const Vector& eigenvalues) {
  const double lambda_max = eigenvalues.size() > 0 ? eigenvalues.cwiseAbs().maxCoeff() : 0.0;
  return 1e-8 * std::max(lambda_max, 1.0);
}

FiedlerPair fiedler_pair(const LaplacianView& lap) {
  const EigenDecomposition ed = eig_sym(lap.matrix);
  const double cutoff = zero_threshold(ed.eigenvalues);
  for (Index k = 0; k < ed.eigenvalues.size(); ++k) {
    if (ed.eigenvalues(k) > cutoff) {
      return FiedlerPair{ed.eigenvalues(k), ed.eigenvectors.col(k)};
    }
  }
  throw std::runtime_error("fiedler_pair: no nonzero eigenvalue");
}

DominantEigenpair dominant_eigpair(const Matrix& weights) {
  require_symmetric(weights, "dominant_eigpair");
  if (weights.cwiseAbs().maxCoeff() == 0.0) {
    throw std::runtime_error("dominant_eigpair: no positive eigenvalue");
  }
  g_eig_count.fetch_add(1, std::memory_order_relaxed);

  // Power iteration on W + s I. The shift keeps the iteration convergent on
  // bipartite graphs, where +lambda_max and -lambda_max would otherwise tie
  // in magnitude; s = max degree bounds |lambda| from Gershgorin, so the
  // shifted matrix is PSD with top eigenvalue lambda_max + s.
  const Index n = weights.rows();
  const double shift = weights.rowwise().sum().maxCoeff();
  Vector v = Vector::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  double rayleigh = 0.0;
  constexpr double kTol = 1e-10;
  constexpr int kMaxIter = 10000;
  for (int it = 0; it < kMaxIter; ++it) {
    Vector next = weights * v + shift * v;
    const double norm = next.norm();
    if (norm == 0.0) throw std::runtime_error("dominant_eigpair: iteration collapsed");
    next /= norm;
    const double delta = (next - v).norm();
    v = next;
    rayleigh = v.dot(weights * v);
    if (delta < kTol) break;
  }
  // Perron convention: nonnegative entries; clamp the noise left by the
  // finite iteration.
  if (v.sum() < 0.0) v = -v;
  v = v.cwiseMax(0.0);
  v /= v.norm();
  if (rayleigh <= 0.0) throw std::runtime_error("dominant_eigpair: no positive eigenvalue");
  return DominantEigenpair{rayleigh, v};
}

long eig_count() { return g_eig_count.load(std::memory_order_relaxed); }

void reset_eig_count() { g_eig_count.store(0, std::memory_order_relaxed); }

}  // namespace bifnet
