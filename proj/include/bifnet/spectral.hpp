#pragma once

#include "bifnet/graph.hpp"
#include "bifnet/types.hpp"

namespace bifnet {

/// Full spectrum of a symmetric matrix: ascending eigenvalues, orthonormal
/// eigenvectors (column k pairs with eigenvalue k). Sign is fixed so the
/// largest-magnitude entry of each eigenvector is positive.
struct EigenDecomposition {
  Vector eigenvalues;
  Matrix eigenvectors;
};

EigenDecomposition eig_sym(const Matrix& a);

/// Eigenvalues only (ascending). Cheaper than eig_sym for entropy work.
Vector eigvals_sym(const Matrix& a);

/// Scale-aware zero cutoff: |lambda| < 1e-8 * max(lambda_max, 1).
double zero_threshold(const Vector& eigenvalues);

struct FiedlerPair {
  double value = 0.0;
  Vector vector;
};

/// Smallest eigenvalue above the zero threshold and its (unit) eigenvector.
/// Throws if all eigenvalues are below the threshold (edgeless graph).
FiedlerPair fiedler_pair(const LaplacianView& lap);

struct DominantEigenpair {
  double value = 0.0;
  Vector vector;
};

/// Largest adjacency eigenvalue with its entrywise-nonnegative unit
/// eigenvector (Perron convention). Throws on the zero matrix.
DominantEigenpair dominant_eigpair(const Matrix& weights);

/// Process-wide count of spectral solves (eig_sym, eigvals_sym,
/// dominant_eigpair). Lets callers verify that a code path performed no
/// eigendecomposition.
long eig_count();
void reset_eig_count();

}  // namespace bifnet
