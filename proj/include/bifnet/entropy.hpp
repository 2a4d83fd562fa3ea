#pragma once

#include "bifnet/graph.hpp"
#include "bifnet/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bifnet {

/// Per-snapshot entropy record. Optional fields are absent when the
/// corresponding computation was not requested or not possible.
struct EntropyResult {
  std::optional<double> exact;           // V, from the full spectrum
  std::optional<double> approx;          // Q, closed form
  double scale = 0.0;                    // c = 1 / trace(L)
  std::optional<int> positive_count;     // eigenvalues above the zero cutoff
  std::optional<double> lower;
  std::optional<double> upper;
  std::string warning;                   // nonempty for gap entries
};

enum class EntropyMode { Exact, Approx, Both };

struct SpectrumEntropy {
  double value = 0.0;  // V
  Vector spectrum;     // clamped unit-trace spectrum of L_c, ascending
  double scale = 0.0;  // c
  int positive_count = 0;
};

/// Shannon entropy of the unit-trace Laplacian spectrum (natural log,
/// 0 ln 0 = 0). Throws on an edgeless graph (zero-trace Laplacian).
SpectrumEntropy vnge_exact(const Graph& g);

/// Quadratic entropy approximation 1 - c^2 (d'd + 1'(W o W) 1), computed
/// without any eigendecomposition. Throws on an edgeless graph.
double vnge_approx(const Graph& g);

struct EntropyBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Log-weighted sandwich bounds on V from the quadratic form and the extreme
/// nonzero eigenvalues of the scaled Laplacian. Requires at least two
/// nonzero eigenvalues.
EntropyBounds vnge_bounds(const Graph& g);

/// One EntropyResult per snapshot; edgeless snapshots produce a gap entry
/// with a warning instead of failing the series.
std::vector<EntropyResult> entropy_series(const TemporalSequence& seq,
                                          EntropyMode mode = EntropyMode::Both,
                                          int threads = 1);

}  // namespace bifnet
