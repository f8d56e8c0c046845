#include <doctest.h>

#include <cmath>

#include "elg/rng.hpp"
#include "elg/teichmuller.hpp"
#include "elgverify/oracles.hpp"

using namespace elg;

namespace {
const TeichPoint kI{0.0, 1.0};
const double kHalfLog2 = 0.5 * std::log(2.0);

TeichPoint rand_teich(Rng& rng) {
  return TeichPoint{rng.uniform(-3.0, 3.0), rng.uniform(0.25, 4.0)};
}
MF rand_mf(Rng& rng) {
  for (;;) {
    MF f{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
    if (std::hypot(f.a, f.b) > 1e-2) return f;
  }
}
}  // namespace

TEST_CASE("extremal length closed form") {
  CHECK(extremal_length(kI, MF{1, 0}) == 1.0);
  CHECK(extremal_length(TeichPoint{0, 2}, MF{0, 1}) == 2.0);
  CHECK(extremal_length(kI, MF{0, 0}) == 0.0);
  CHECK(extremal_length(kI, MF{3, 4}) == 25.0);

  // degree-2 homogeneity
  Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    TeichPoint t = rand_teich(rng);
    MF f = rand_mf(rng);
    double s = rng.uniform(0.0, 5.0);
    CHECK(extremal_length(t, scaled(s, f)) ==
          doctest::Approx(s * s * extremal_length(t, f)).epsilon(1e-14));
  }

  // the form matrix agrees with the scalar formula and has unit determinant
  for (int k = 0; k < 50; ++k) {
    TeichPoint t = rand_teich(rng);
    Eigen::Matrix2d m = extremal_form(t);
    CHECK(m.determinant() == doctest::Approx(1.0).epsilon(1e-13));
    MF f = rand_mf(rng);
    Eigen::Vector2d v(f.a, f.b);
    CHECK(v.dot(m * v) == doctest::Approx(extremal_length(t, f)).epsilon(1e-13));
  }
}

TEST_CASE("Teichmuller distance: pencil eigenvalue with cross-checks") {
  CHECK(teich_distance(kI, kI) == 0.0);
  CHECK(teich_distance(kI, TeichPoint{0, 2}) == doctest::Approx(kHalfLog2).epsilon(1e-15));
  // equals half the curvature -1 hyperbolic distance
  CHECK(teich_distance(kI, TeichPoint{1, 1}) ==
        doctest::Approx(0.5 * std::acosh(1.5)).epsilon(1e-13));

  Rng rng(5);
  for (int k = 0; k < 60; ++k) {
    TeichPoint a = rand_teich(rng), b = rand_teich(rng);
    double d = teich_distance(a, b);
    CHECK(d == teich_distance(b, a));
    // slope-circle supremum oracle
    CHECK(std::abs(d - oracle::grid_sup_distance(a, b, 4096)) <= 1e-9);
    // acosh route
    double u = ((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y)) / (2.0 * a.y * b.y);
    CHECK(std::abs(d - 0.5 * std::acosh(1.0 + u)) <= 1e-12);
  }
}

TEST_CASE("Kerckhoff supremum pair") {
  auto kp = kerckhoff_sup(TeichPoint{0, 2}, kI);
  CHECK(kp.lambda_max == doctest::Approx(2.0).epsilon(1e-14));
  CHECK_FALSE(kp.isotropic);
  CHECK(std::abs(kp.maximizer.a) <= 1e-12);
  CHECK(kp.maximizer.b == doctest::Approx(1.0).epsilon(1e-12));

  auto rev = kerckhoff_sup(kI, TeichPoint{0, 2});
  CHECK(rev.lambda_max == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(rev.maximizer.a == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(rev.maximizer.b) <= 1e-12);

  CHECK(kerckhoff_sup(kI, kI).isotropic);
  CHECK(kerckhoff_sup(kI, kI).lambda_max == 1.0);

  Rng rng(9);
  for (int k = 0; k < 100; ++k) {
    TeichPoint a = rand_teich(rng), b = rand_teich(rng);
    auto p = kerckhoff_sup(a, b);
    double lam = std::exp(2.0 * teich_distance(a, b));
    CHECK(p.lambda_max == doctest::Approx(lam).epsilon(1e-12));
    // both extreme ratios attained simultaneously
    double rf = extremal_length(a, p.maximizer) / extremal_length(b, p.maximizer);
    double rg = extremal_length(b, p.minimizer) / extremal_length(a, p.minimizer);
    CHECK(rf == doctest::Approx(p.lambda_max).epsilon(1e-10));
    CHECK(rg == doctest::Approx(p.lambda_max).epsilon(1e-10));
    // normalized into the unit extremal-length sphere at the basepoint
    CHECK(extremal_length(kI, p.maximizer) == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("Minsky inequality and its sharp pairs") {
  Rng rng(13);
  for (int k = 0; k < 500; ++k) {
    TeichPoint t = rand_teich(rng);
    MF f = rand_mf(rng), g = rand_mf(rng);
    double i = intersection(f, g);
    double prod = extremal_length(t, f) * extremal_length(t, g);
    CHECK(i * i <= prod * (1.0 + 1e-12));

    // the sharp partner: rotate the form image by a quarter turn
    Eigen::Vector2d mf = extremal_form(t) * Eigen::Vector2d(f.a, f.b);
    MF partner{-mf.y(), mf.x()};
    double ie = intersection(f, partner);
    double pe = extremal_length(t, f) * extremal_length(t, partner);
    CHECK(ie * ie == doctest::Approx(pe).epsilon(1e-10));
  }
}

TEST_CASE("Gromov product at a basepoint") {
  CHECK(gromov_product(kI, kI, TeichPoint{0, 2}) == 0.0);
  CHECK(gromov_product(kI, TeichPoint{0, 2}, TeichPoint{0, 0.5}) <= 1e-15);
  CHECK(gromov_product(kI, TeichPoint{0, 2}, TeichPoint{0, 2}) ==
        doctest::Approx(kHalfLog2).epsilon(1e-15));
}

TEST_CASE("geodesic rays") {
  for (double t : {0.0, 0.3, 1.0, 2.5}) {
    TeichPoint up = geodesic_ray(kI, MF{1, 0}, t);
    CHECK(up.x == 0.0);
    CHECK(up.y == doctest::Approx(std::exp(2.0 * t)).epsilon(1e-14));
    TeichPoint down = geodesic_ray(kI, MF{0, 1}, t);
    CHECK(std::abs(down.x) <= 1e-15);
    CHECK(down.y == doctest::Approx(std::exp(-2.0 * t)).epsilon(1e-14));
  }
  CHECK(geodesic_ray(kI, MF{2, 3}, 0.0) == kI);
  CHECK_THROWS(geodesic_ray(kI, MF{0, 0}, 1.0));

  Rng rng(17);
  for (int k = 0; k < 100; ++k) {
    TeichPoint t0 = rand_teich(rng);
    MF alpha = rand_mf(rng);
    double t = rng.uniform(0.0, 10.0);
    TeichPoint pt = geodesic_ray(t0, alpha, t);
    CHECK(std::abs(teich_distance(t0, pt) - t) <= 1e-12);
    CHECK(extremal_length(pt, alpha) * std::exp(2.0 * t) ==
          doctest::Approx(extremal_length(t0, alpha)).epsilon(1e-11));
  }
}

TEST_CASE("boundary slopes and ideal points") {
  MF inf_cls = boundary_slope(std::nullopt);
  CHECK(inf_cls.a == 1.0);
  CHECK(inf_cls.b == 0.0);

  MF zero_cls = boundary_slope(0.0);
  CHECK(zero_cls.a == 0.0);
  CHECK(zero_cls.b == 1.0);

  MF m32 = boundary_slope(-1.5);
  MF want = normalize_projective(MF{3, 2});
  CHECK(m32.a == doctest::Approx(want.a).epsilon(1e-15));
  CHECK(m32.b == doctest::Approx(want.b).epsilon(1e-15));

  CHECK(!boundary_point(MF{1, 0}).has_value());
  CHECK(*boundary_point(MF{3, 2}) == -1.5);

  MFQ cls = boundary_slope_exact(-3, 2);
  CHECK(cls.a == Rational(3));
  CHECK(cls.b == Rational(2));

  // extremal length of the slope class decays along rays into its ideal point
  Rng rng(19);
  for (int k = 0; k < 50; ++k) {
    double r = rng.uniform(-4.0, 4.0);
    TeichPoint far = geodesic_ray(rand_teich(rng), boundary_slope(r), 8.0);
    CHECK(extremal_length(far, boundary_slope(r)) <= 1e-5);
    CHECK(std::abs(far.x - r) <= 1e-4);
  }
}

TEST_CASE("points outside the upper half-plane are rejected") {
  CHECK_THROWS(TeichPoint{0.0, 0.0});
  CHECK_THROWS(TeichPoint{1.0, -2.0});
}
