#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "bifnet/stats.hpp"

using namespace bifnet;

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

Matrix gaussian_cloud(int n, int l, unsigned seed, double mean_shift = 0.0) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix x(n, l);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < l; ++j) x(i, j) = gauss(rng) + mean_shift;
  }
  return x;
}

}  // namespace

TEST_CASE("zscore_series on a linear ramp") {
  const std::vector<double> z = zscore_series({1.0, 2.0, 3.0});
  REQUIRE(z.size() == 3);
  CHECK(std::abs(z[0] + 1.224744871391589) <= 1e-12);
  CHECK(std::abs(z[1]) <= 1e-12);
  CHECK(std::abs(z[2] - 1.224744871391589) <= 1e-12);
}

TEST_CASE("zscore_series has zero mean and unit population variance") {
  const std::vector<double> v{3.5, -2.0, 0.25, 9.0, 4.0, 4.0, -1.5};
  const std::vector<double> z = zscore_series(v);
  double mean = 0.0;
  for (double x : z) mean += x;
  mean /= static_cast<double>(z.size());
  CHECK(std::abs(mean) <= 1e-12);
  double var = 0.0;
  for (double x : z) var += (x - mean) * (x - mean);
  var /= static_cast<double>(z.size());
  CHECK(std::abs(var - 1.0) <= 1e-9);
}

TEST_CASE("zscore_series maps constant input to zeros") {
  const std::vector<double> z = zscore_series({4.0, 4.0, 4.0});
  for (double x : z) CHECK(x == 0.0);
  CHECK(zscore_series({7.5}).at(0) == 0.0);
}

TEST_CASE("zscore_series passes non-finite entries through") {
  const std::vector<double> z = zscore_series({1.0, kNan, 3.0});
  REQUIRE(z.size() == 3);
  CHECK(std::abs(z[0] + 1.0) <= 1e-12);  // moments over {1, 3}: mean 2, std 1
  CHECK(std::isnan(z[1]));
  CHECK(std::abs(z[2] - 1.0) <= 1e-12);
  CHECK_THROWS(zscore_series({}));
}

TEST_CASE("hotelling_t2 univariate fixture") {
  Matrix a(3, 1), b(3, 1);
  a << 0.0, 0.0, 1.0;
  b << 1.0, 1.0, 2.0;
  const HotellingResult r = hotelling_t2(a, b);
  CHECK(std::abs(r.t2 - 4.5) <= 1e-12);
  CHECK(std::abs(r.f - 4.5) <= 1e-12);
  CHECK(std::abs(r.p - 0.10119150721829545) <= 1e-12);
  CHECK(!r.ridged);
}

TEST_CASE("identical clouds give exactly p = 1") {
  const Matrix a = gaussian_cloud(10, 3, 5);
  const HotellingResult r = hotelling_t2(a, a);
  CHECK(r.t2 == 0.0);
  CHECK(r.f == 0.0);
  CHECK(r.p == 1.0);

  // even when the shared cloud is rank-deficient
  Matrix flat(6, 2);
  for (int i = 0; i < 6; ++i) flat.row(i) << i * 1.0, i * 2.0;
  const HotellingResult rf = hotelling_t2(flat, flat);
  CHECK(rf.p == 1.0);
}

TEST_CASE("swapping the groups changes nothing, bit for bit") {
  const Matrix a = gaussian_cloud(12, 3, 7, 0.0);
  const Matrix b = gaussian_cloud(15, 3, 11, 0.8);
  const HotellingResult ab = hotelling_t2(a, b);
  const HotellingResult ba = hotelling_t2(b, a);
  CHECK(ab.t2 == ba.t2);
  CHECK(ab.f == ba.f);
  CHECK(ab.p == ba.p);
}

TEST_CASE("t2 is invariant under invertible affine maps") {
  const Matrix a = gaussian_cloud(20, 3, 13);
  const Matrix b = gaussian_cloud(18, 3, 17, 0.6);
  Matrix m(3, 3);
  m << 2.0, 0.5, -0.3, 0.0, 1.5, 0.7, -0.2, 0.1, 0.9;
  const Vector t = Vector::LinSpaced(3, -1.0, 1.0);
  Matrix am = a * m.transpose();
  am.rowwise() += t.transpose();
  Matrix bm = b * m.transpose();
  bm.rowwise() += t.transpose();
  const HotellingResult base = hotelling_t2(a, b);
  const HotellingResult mapped = hotelling_t2(am, bm);
  CHECK(std::abs(base.t2 - mapped.t2) <= 1e-6 * std::max(1.0, std::abs(base.t2)));
  CHECK(std::abs(base.p - mapped.p) <= 1e-6);
}

TEST_CASE("p decreases as the mean separation grows") {
  Matrix a = gaussian_cloud(15, 2, 19);
  a.rowwise() -= a.colwise().mean();  // center so diff is exactly shift * (1,1)
  Matrix b0 = gaussian_cloud(15, 2, 23);
  b0.rowwise() -= b0.colwise().mean();
  double prev_p = 2.0;
  double prev_t2 = -1.0;
  for (double shift : {0.5, 1.0, 2.0, 4.0}) {
    Matrix b = b0;
    b.array() += shift;
    const HotellingResult r = hotelling_t2(a, b);
    CHECK(r.t2 > prev_t2);
    CHECK(r.p < prev_p);
    prev_p = r.p;
    prev_t2 = r.t2;
  }
}

TEST_CASE("near-singular pooled covariance takes the ridge path") {
  // second variate is an exact copy of the first within both groups
  Matrix a(8, 2), b(8, 2);
  for (int i = 0; i < 8; ++i) {
    a.row(i) << i * 0.5, i * 0.5;
    b.row(i) << i * 0.5 + 2.0, i * 0.5 + 3.0;
  }
  const HotellingResult r = hotelling_t2(a, b);
  CHECK(r.ridged);
  CHECK(std::isfinite(r.t2));
  CHECK(r.t2 >= 0.0);
  CHECK(r.p >= 0.0);
  CHECK(r.p <= 1.0);
}

TEST_CASE("hotelling_t2 input validation") {
  const Matrix a = gaussian_cloud(5, 2, 29);
  CHECK_THROWS_AS(hotelling_t2(a, gaussian_cloud(5, 3, 31)), std::invalid_argument);
  // n_a + n_b - 2 < l
  CHECK_THROWS_AS(hotelling_t2(gaussian_cloud(1, 2, 37), gaussian_cloud(2, 2, 41)),
                  std::invalid_argument);
  CHECK_THROWS_AS(hotelling_t2(Matrix(0, 2), a), std::invalid_argument);
}

TEST_CASE("bifurcation_report flags the first significant step") {
  std::vector<Matrix> ea, eb;
  std::vector<double> va, vb;
  for (int t = 0; t < 8; ++t) {
    const Matrix base = gaussian_cloud(25, 2, 100 + t);
    ea.push_back(base);
    if (t < 4) {
      eb.push_back(base);  // identical before the shift
    } else {
      Matrix shifted = gaussian_cloud(25, 2, 200 + t);
      shifted.array() += 6.0;
      eb.push_back(shifted);
    }
    va.push_back(1.0 + 0.01 * t);
    vb.push_back(t < 4 ? 1.0 + 0.01 * t : 0.5);
  }
  const BifurcationReport rep = bifurcation_report(ea, eb, va, vb, 0.01);
  REQUIRE(rep.critical_time.has_value());
  CHECK(*rep.critical_time == 4);
  for (int t = 0; t < 4; ++t) {
    CHECK(rep.t2[t] == 0.0);
    CHECK(rep.p[t] == 1.0);
  }
  CHECK(rep.p[4] < 0.01);
  CHECK(rep.timestamps == std::vector<long>{0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(rep.z_entropy_a.size() == 8);
  CHECK(rep.z_entropy_b.size() == 8);
}

TEST_CASE("bifurcation_report without a shift finds no critical time") {
  std::vector<Matrix> ea, eb;
  std::vector<double> v(6, 1.0);
  for (int t = 0; t < 6; ++t) {
    const Matrix base = gaussian_cloud(20, 2, 300 + t);
    ea.push_back(base);
    eb.push_back(base);
  }
  const BifurcationReport rep = bifurcation_report(ea, eb, v, v);
  CHECK(!rep.critical_time.has_value());
  for (double p : rep.p) CHECK(p == 1.0);
}

TEST_CASE("failed steps carry NaN and are skipped in the scan") {
  std::vector<Matrix> ea, eb;
  std::vector<double> v(3, 1.0);
  // step 0: insufficient samples for l = 2 -> per-step failure
  ea.push_back(gaussian_cloud(1, 2, 400));
  eb.push_back(gaussian_cloud(1, 2, 401));
  // step 1: strong shift -> significant
  ea.push_back(gaussian_cloud(25, 2, 402));
  Matrix shifted = gaussian_cloud(25, 2, 403);
  shifted.array() += 8.0;
  eb.push_back(shifted);
  // step 2: identical
  const Matrix same = gaussian_cloud(25, 2, 404);
  ea.push_back(same);
  eb.push_back(same);

  const std::vector<long> ts{10, 20, 30};
  const BifurcationReport rep = bifurcation_report(ea, eb, v, v, 0.01, &ts);
  CHECK(std::isnan(rep.t2[0]));
  CHECK(std::isnan(rep.p[0]));
  REQUIRE(!rep.warnings.empty());
  CHECK(rep.warnings[0].find("t=10") != std::string::npos);
  REQUIRE(rep.critical_time.has_value());
  CHECK(*rep.critical_time == 20);
  CHECK(rep.timestamps == ts);
}

TEST_CASE("bifurcation_report validates input lengths") {
  std::vector<Matrix> ea{gaussian_cloud(5, 2, 500)};
  std::vector<Matrix> eb{gaussian_cloud(5, 2, 501), gaussian_cloud(5, 2, 502)};
  std::vector<double> v1(1, 0.0), v2(2, 0.0);
  CHECK_THROWS_AS(bifurcation_report(ea, eb, v1, v1), std::invalid_argument);
  CHECK_THROWS_AS(bifurcation_report(ea, ea, v1, v2), std::invalid_argument);
  const std::vector<long> ts{0, 1};
  CHECK_THROWS_AS(bifurcation_report(ea, ea, v1, v1, 0.01, &ts), std::invalid_argument);
}
