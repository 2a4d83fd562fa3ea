#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "bifnet/entropy.hpp"
#include "bifnet/graph.hpp"
#include "bifnet/spectral.hpp"

using namespace bifnet;

namespace {

Graph path3() { return Graph::from_edges(3, {{0, 1}, {1, 2}}); }

Graph complete(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0});
  }
  return Graph::from_edges(n, edges);
}

Graph random_connected(int n, double p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    edges.push_back({static_cast<int>(rng() % static_cast<unsigned>(i)), i, 1.0});
  }
  Graph spine = Graph::from_edges(n, edges);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!spine.has_edge(i, j) && u(rng) < p) edges.push_back({i, j, 1.0 + u(rng)});
    }
  }
  return Graph::from_edges(n, edges);
}

// Entropy of the spectrum of L / trace(L), computed from scratch.
double entropy_by_hand(const Graph& g) {
  const LaplacianView lap = laplacian(g);
  const Matrix lc = lap.matrix / lap.matrix.trace();
  const Vector lam = eigvals_sym(lc);
  double v = 0.0;
  for (Index i = 0; i < lam.size(); ++i) {
    if (lam(i) > 1e-12) v -= lam(i) * std::log(lam(i));
  }
  return v;
}

}  // namespace

TEST_CASE("exact entropy on complete graphs is ln(n-1)") {
  for (int n : {3, 5, 10, 25}) {
    const SpectrumEntropy e = vnge_exact(complete(n));
    CHECK(std::abs(e.value - std::log(n - 1.0)) <= 1e-10);
    CHECK(e.positive_count == n - 1);
    CHECK(std::abs(e.scale - 1.0 / (n * (n - 1.0))) <= 1e-15);
  }
}

TEST_CASE("single edge has exactly zero entropy") {
  const SpectrumEntropy e = vnge_exact(Graph::from_edges(2, {{0, 1}}));
  CHECK(e.value == 0.0);
  CHECK(e.positive_count == 1);
}

TEST_CASE("exact entropy of P3") {
  // unit-trace spectrum {0, 1/4, 3/4}
  const SpectrumEntropy e = vnge_exact(path3());
  CHECK(std::abs(e.value - 0.5623351446188083) <= 1e-12);
  REQUIRE(e.spectrum.size() == 3);
  CHECK(std::abs(e.spectrum(0)) <= 1e-15);
  CHECK(std::abs(e.spectrum(1) - 0.25) <= 1e-12);
  CHECK(std::abs(e.spectrum(2) - 0.75) <= 1e-12);
}

TEST_CASE("entropy never exceeds ln(n-1)") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 20);
    const Graph g = random_connected(n, 0.3, rng);
    const SpectrumEntropy e = vnge_exact(g);
    CHECK(e.value <= std::log(n - 1.0) + 1e-12);
    CHECK(e.value >= 0.0);
    CHECK(std::abs(e.value - entropy_by_hand(g)) <= 1e-10);
  }
}

TEST_CASE("quadratic approximation fixtures") {
  CHECK(std::abs(vnge_approx(path3()) - 0.375) <= 1e-15);
  CHECK(std::abs(vnge_approx(complete(3)) - 0.5) <= 1e-15);
  for (int n : {4, 9, 17}) {
    CHECK(std::abs(vnge_approx(complete(n)) - (n - 2.0) / (n - 1.0)) <= 1e-12);
  }
}

TEST_CASE("quadratic approximation equals 1 - sum lambda^2") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_connected(6 + static_cast<int>(rng() % 14), 0.4, rng);
    const LaplacianView lap = laplacian(g);
    const Vector lam = eigvals_sym(Matrix(lap.matrix / lap.matrix.trace()));
    const double q_ref = 1.0 - lam.squaredNorm();
    CHECK(std::abs(vnge_approx(g) - q_ref) <= 1e-10);
    CHECK(vnge_approx(g) >= 0.0);
    CHECK(vnge_approx(g) <= (g.size() - 2.0) / (g.size() - 1.0) + 1e-12);
  }
}

TEST_CASE("sandwich bounds bracket the exact value") {
  const EntropyBounds p3 = vnge_bounds(path3());
  CHECK(std::abs(p3.lower - 0.14384103622589045) <= 1e-9);
  CHECK(std::abs(p3.upper - 2.0794415416798357) <= 1e-9);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = random_connected(5 + static_cast<int>(rng() % 25), 0.35, rng);
    const EntropyBounds b = vnge_bounds(g);
    const double v = vnge_exact(g).value;
    CHECK(b.lower <= v + 1e-10);
    CHECK(v <= b.upper + 1e-10);
  }
}

TEST_CASE("bounds collapse to equality on complete graphs") {
  for (int n : {3, 6, 12}) {
    const EntropyBounds b = vnge_bounds(complete(n));
    const double v = std::log(n - 1.0);
    CHECK(std::abs(b.lower - v) <= 1e-10);
    CHECK(std::abs(b.upper - v) <= 1e-10);
  }
}

TEST_CASE("bounds require two nonzero eigenvalues") {
  CHECK_THROWS(vnge_bounds(Graph::from_edges(2, {{0, 1}})));
}

TEST_CASE("edgeless graphs are rejected") {
  CHECK_THROWS(vnge_exact(Graph(3)));
  CHECK_THROWS(vnge_approx(Graph(3)));
  CHECK_THROWS(vnge_bounds(Graph(3)));
}

TEST_CASE("entropy is exactly invariant under power-of-two weight scaling") {
  std::mt19937_64 rng(31);
  const Graph g = random_connected(12, 0.4, rng);
  const double v0 = vnge_exact(g).value;
  const double q0 = vnge_approx(g);
  for (double alpha : {2.0, 0.25, 1024.0}) {
    Graph scaled(g.size(), Matrix(g.weights() * alpha));
    CHECK(vnge_exact(scaled).value == v0);
    CHECK(vnge_approx(scaled) == q0);
  }
}

TEST_CASE("entropy is invariant under arbitrary weight scaling to 1e-12") {
  std::mt19937_64 rng(37);
  const Graph g = random_connected(10, 0.5, rng);
  const double v0 = vnge_exact(g).value;
  for (double alpha : {3.7, 0.0193, 815.11}) {
    Graph scaled(g.size(), Matrix(g.weights() * alpha));
    CHECK(std::abs(vnge_exact(scaled).value - v0) <= 1e-12);
    CHECK(std::abs(vnge_approx(scaled) - vnge_approx(g)) <= 1e-12);
  }
}

TEST_CASE("entropy_series handles gaps and modes") {
  std::vector<Graph> gs{complete(3), Graph(3), path3()};
  TemporalSequence seq(gs, {0, 1, 2});

  const auto both = entropy_series(seq, EntropyMode::Both);
  REQUIRE(both.size() == 3);
  CHECK(std::abs(*both[0].exact - std::log(2.0)) <= 1e-10);
  CHECK(std::abs(*both[0].approx - 0.5) <= 1e-12);
  CHECK(both[0].lower.has_value());
  CHECK(both[0].upper.has_value());
  CHECK(both[0].warning.empty());

  CHECK(!both[1].exact.has_value());
  CHECK(!both[1].approx.has_value());
  CHECK(!both[1].warning.empty());
  CHECK(both[1].warning.find("t=1") != std::string::npos);

  CHECK(std::abs(*both[2].exact - 0.5623351446188083) <= 1e-10);

  const auto approx_only = entropy_series(seq, EntropyMode::Approx);
  CHECK(!approx_only[0].exact.has_value());
  CHECK(approx_only[0].approx.has_value());
  CHECK(!approx_only[0].lower.has_value());

  const auto exact_only = entropy_series(seq, EntropyMode::Exact);
  CHECK(exact_only[0].exact.has_value());
  CHECK(!exact_only[0].approx.has_value());
}

TEST_CASE("approx mode performs no eigendecompositions") {
  std::mt19937_64 rng(41);
  std::vector<Graph> snaps;
  for (int t = 0; t < 4; ++t) snaps.push_back(random_connected(15, 0.3, rng));
  TemporalSequence seq(snaps, {0, 1, 2, 3});
  reset_eig_count();
  const auto rows = entropy_series(seq, EntropyMode::Approx);
  CHECK(eig_count() == 0);
  for (const auto& r : rows) CHECK(r.approx.has_value());
  (void)entropy_series(seq, EntropyMode::Exact);
  CHECK(eig_count() > 0);
}

TEST_CASE("entropy_series is identical across thread counts") {
  std::mt19937_64 rng(43);
  std::vector<Graph> snaps;
  for (int t = 0; t < 6; ++t) snaps.push_back(random_connected(12, 0.35, rng));
  TemporalSequence seq(snaps, {0, 1, 2, 3, 4, 5});
  const auto serial = entropy_series(seq, EntropyMode::Both, 1);
  const auto parallel = entropy_series(seq, EntropyMode::Both, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(*serial[i].exact == *parallel[i].exact);
    CHECK(*serial[i].approx == *parallel[i].approx);
  }
}
