#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>

#include "elg/foliation.hpp"

namespace elg {

/// Marked flat structure on the torus: a point tau = x + iy of the upper
/// half-plane. y > 0 is enforced at construction.
struct TeichPoint {
  double x = 0.0;
  double y = 1.0;

  TeichPoint() = default;
  TeichPoint(double x_, double y_) : x(x_), y(y_) {
    if (!(y > 0.0)) throw std::invalid_argument("Teichmuller point needs Im tau > 0");
  }
  explicit TeichPoint(std::complex<double> tau) : TeichPoint(tau.real(), tau.imag()) {}

  std::complex<double> tau() const { return {x, y}; }

  friend bool operator==(const TeichPoint& s, const TeichPoint& t) {
    return s.x == t.x && s.y == t.y;
  }
};

/// Default basepoint tau = i for every basepoint-dependent construction.
inline TeichPoint basepoint() { return TeichPoint{0.0, 1.0}; }

/// Extremal length as a quadratic form: Ext_tau(a, b) = |a + b tau|^2 / y.
/// Scalar-generic so rational inputs evaluate exactly.
template <typename Scalar>
Scalar extremal_length(const Scalar& x, const Scalar& y, const Foliation<Scalar>& f) {
  Scalar u = f.a + f.b * x;
  Scalar v = f.b * y;
  return (u * u + v * v) / y;
}

inline double extremal_length(const TeichPoint& t, const MF& f) {
  return extremal_length(t.x, t.y, f);
}

/// The form matrix M_tau = (1/y) [[1, x], [x, x^2 + y^2]]; unit determinant,
/// positive definite, Ext_tau(F) = F^T M_tau F.
inline Eigen::Matrix2d extremal_form(const TeichPoint& t) {
  Eigen::Matrix2d m;
  m << 1.0 / t.y, t.x / t.y, t.x / t.y, (t.x * t.x + t.y * t.y) / t.y;
  return m;
}

namespace detail {

/// Gap parameter of the pencil (M_t2, M_t1): with unit determinants the two
/// generalized eigenvalues are {L, 1/L} and L + 1/L = 2(1 + u). Computed from
/// coordinate differences only, so u = 0 exactly when t1 == t2.
inline double pencil_gap(const TeichPoint& t1, const TeichPoint& t2) {
  double dx = t1.x - t2.x;
  double dy = t1.y - t2.y;
  return (dx * dx + dy * dy) / (2.0 * t1.y * t2.y);
}

}  // namespace detail

/// Teichmuller distance by Kerckhoff's formula: half the log of the largest
/// eigenvalue of the pencil (M_t2, M_t1), i.e. of sup_F Ext_t2(F)/Ext_t1(F).
/// The eigenvalue comes from the trace/determinant closed form; log1p keeps
/// nearby points fully accurate.
inline double teich_distance(const TeichPoint& t1, const TeichPoint& t2) {
  double u = detail::pencil_gap(t1, t2);
  return 0.5 * std::log1p(u + std::sqrt(u * (2.0 + u)));
}

/// Gromov product (d(x0,y) + d(x0,z) - d(y,z)) / 2, clamped at zero against
/// roundoff on collinear triples.
inline double gromov_product(const TeichPoint& x0, const TeichPoint& y, const TeichPoint& z) {
  double v = 0.5 * (teich_distance(x0, y) + teich_distance(x0, z) - teich_distance(y, z));
  return v < 0.0 ? 0.0 : v;
}

/// Extremal pair realizing both extreme ratios of Kerckhoff's supremum.
struct KerckhoffPair {
  double lambda_max = 1.0;   ///< sup_F Ext_t1(F) / Ext_t2(F) = exp(2 d_T)
  MF maximizer{1.0, 0.0};    ///< F with Ext_t1/Ext_t2 = lambda_max, Ext_x0 = 1
  MF minimizer{0.0, 1.0};    ///< G with Ext_t2/Ext_t1 = lambda_max, Ext_x0 = 1
  bool isotropic = false;    ///< t1 == t2: every direction is extremal
};

namespace detail {

inline MF pencil_eigenvector(const Eigen::Matrix2d& m1, const Eigen::Matrix2d& m2,
                             double lambda) {
  Eigen::Matrix2d c = m1 - lambda * m2;
  // Null vector from the larger row of the singular matrix.
  Eigen::Vector2d r0 = c.row(0), r1 = c.row(1);
  Eigen::Vector2d v = r0.squaredNorm() >= r1.squaredNorm()
                          ? Eigen::Vector2d(c(0, 1), -c(0, 0))
                          : Eigen::Vector2d(c(1, 1), -c(1, 0));
  return MF{v.x(), v.y()};
}

}  // namespace detail

/// Solves sup_F Ext_t1(F)/Ext_t2(F) as the 2x2 generalized eigenproblem.
/// Returns the eigenvalue pair {lambda, 1/lambda} through lambda_max and the
/// two eigen-directions normalized into the unit extremal-length sphere at
/// the basepoint x0. When t1 == t2 the pencil is isotropic and no preferred
/// pair exists; the flag is set and lambda_max = 1.
inline KerckhoffPair kerckhoff_sup(const TeichPoint& t1, const TeichPoint& t2,
                                   const TeichPoint& x0 = basepoint()) {
  KerckhoffPair out;
  double u = detail::pencil_gap(t1, t2);
  if (u == 0.0) {
    out.isotropic = true;
    return out;
  }
  double s = std::sqrt(u * (2.0 + u));
  out.lambda_max = 1.0 + u + s;
  double lambda_min = 1.0 / out.lambda_max;

  Eigen::Matrix2d m1 = extremal_form(t1), m2 = extremal_form(t2);
  auto unit_at_x0 = [&x0](MF f) {
    f = normalize_projective(f);
    double e = extremal_length(x0, f);
    return MF{f.a / std::sqrt(e), f.b / std::sqrt(e)};
  };
  out.maximizer = unit_at_x0(detail::pencil_eigenvector(m1, m2, out.lambda_max));
  out.minimizer = unit_at_x0(detail::pencil_eigenvector(m1, m2, lambda_min));
  return out;
}

/// Ideal endpoint r of the upper half-plane associated with a projective
/// foliation class: extremal length of [F] decays along rays into r.
/// nullopt encodes r = infinity.
inline std::optional<double> boundary_point(const MF& f) {
  if (f.a == 0.0 && f.b == 0.0)
    throw std::invalid_argument("zero foliation has no boundary point");
  if (f.b == 0.0) return std::nullopt;
  return -f.a / f.b;
}

/// Inverse correspondence: the projective foliation vanishing at the ideal
/// point r. infinity -> [(1, 0)], finite r -> [(-r, 1)].
inline MF boundary_slope(const std::optional<double>& r) {
  if (!r) return MF{1.0, 0.0};
  return normalize_projective(MF{-*r, 1.0});
}

/// Exact variant on a projective rational ideal point p/q ((1,0) encodes
/// infinity); returns the primitive integer class.
inline MFQ boundary_slope_exact(long long p, long long q) {
  if (p == 0 && q == 0) throw std::invalid_argument("ideal point needs (p, q) != 0");
  return primitive_class(MFQ{Rational(-p), Rational(q)});
}

/// Unit-speed Teichmuller geodesic ray from t0 whose vertical foliation is
/// alpha: d_T(t0, ray(t)) = t and Ext_{ray(t)}(alpha) = e^{-2t} Ext_{t0}(alpha).
/// Realized as the half-plane geodesic into the ideal point of [alpha],
/// traversed at twice hyperbolic unit speed via the chart w = -1/(tau - r).
inline TeichPoint geodesic_ray(const TeichPoint& t0, const MF& alpha, double t) {
  if (alpha.is_zero()) throw std::invalid_argument("geodesic ray needs a nonzero foliation");
  if (t < 0.0) throw std::invalid_argument("geodesic ray needs t >= 0");
  if (t == 0.0) return t0;
  std::optional<double> r = boundary_point(alpha);
  if (!r) return TeichPoint{t0.x, t0.y * std::exp(2.0 * t)};
  std::complex<double> w = -1.0 / (t0.tau() - *r);
  w = {w.real(), w.imag() * std::exp(2.0 * t)};
  return TeichPoint{*r - 1.0 / w};
}

}  // namespace elg
