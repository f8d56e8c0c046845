#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>

#include "elg/cone.hpp"
#include "elg/foliation.hpp"
#include "elg/rng.hpp"
#include "elg/teichmuller.hpp"

namespace elg {

/// Mapping class of the torus: an integer 2x2 matrix with determinant +-1.
/// Determinant -1 classes are orientation reversing and act through the
/// fixed reflection diag(1, -1).
class MappingClass {
public:
  using Matrix = Eigen::Matrix<long long, 2, 2>;

  explicit MappingClass(const Matrix& m) : m_(m) {
    long long d = det();
    if (d != 1 && d != -1) throw std::invalid_argument("mapping class needs |det| = 1");
  }
  MappingClass(long long a, long long b, long long c, long long d)
      : MappingClass((Matrix() << a, b, c, d).finished()) {}

  const Matrix& matrix() const { return m_; }
  long long det() const { return m_(0, 0) * m_(1, 1) - m_(0, 1) * m_(1, 0); }
  bool orientation_preserving() const { return det() == 1; }

  MappingClass inverse() const {
    long long d = det();  // adjugate over det, and det is its own inverse
    return MappingClass(d * m_(1, 1), -d * m_(0, 1), -d * m_(1, 0), d * m_(0, 0));
  }

  friend MappingClass operator*(const MappingClass& a, const MappingClass& b) {
    return MappingClass(a.m_ * b.m_);
  }

  /// Order-four rotation of the basis curves.
  static MappingClass rotation() { return MappingClass(0, -1, 1, 0); }
  /// Dehn twist along the (1, 0) curve.
  static MappingClass twist() { return MappingClass(1, 1, 0, 1); }
  static MappingClass twist_inverse() { return MappingClass(1, -1, 0, 1); }
  /// Orientation-reversing reflection.
  static MappingClass reflection() { return MappingClass(1, 0, 0, -1); }
  static MappingClass identity() { return MappingClass(1, 0, 0, 1); }

private:
  Matrix m_;
};

/// Linear action on homology weights; preserves intersection numbers since
/// |det| = 1.
template <typename Scalar>
Foliation<Scalar> act(const MappingClass& h, const Foliation<Scalar>& f) {
  const auto& m = h.matrix();
  return Foliation<Scalar>{Scalar(m(0, 0)) * f.a + Scalar(m(0, 1)) * f.b,
                           Scalar(m(1, 0)) * f.a + Scalar(m(1, 1)) * f.b};
}

/// Action on marked structures, determined by the contract
/// Ext_{h.tau}(h.F) = Ext_tau(F): for det = +1 the Moebius map
/// tau -> (a tau - b) / (-c tau + d); det = -1 factors through the
/// reflection tau -> -conj(tau) first.
inline TeichPoint act(const MappingClass& h, const TeichPoint& t) {
  std::complex<double> tau = t.tau();
  MappingClass g = h;
  if (!h.orientation_preserving()) {
    tau = std::complex<double>(-tau.real(), tau.imag());
    g = h * MappingClass::reflection();  // h = g * reflection, det g = +1
  }
  const auto& m = g.matrix();
  double a = static_cast<double>(m(0, 0)), b = static_cast<double>(m(0, 1));
  double c = static_cast<double>(m(1, 0)), d = static_cast<double>(m(1, 1));
  std::complex<double> image = (a * tau - b) / (-c * tau + d);
  return TeichPoint{image};
}

/// Equivariant action on the cone.
inline ConePoint act(const MappingClass& h, const ConePoint& a) {
  switch (a.kind()) {
    case ConePoint::Kind::zero:
      return ConePoint::zero();
    case ConePoint::Kind::interior:
      return ConePoint::interior(a.scale(), act(h, a.tau()));
    case ConePoint::Kind::boundary:
    default:
      if (a.exact_foliation()) return ConePoint::boundary(act(h, *a.exact_foliation()));
      return ConePoint::boundary(act(h, a.foliation()));
  }
}

/// Induced action on ideal points of the half-plane (nullopt = infinity),
/// matching the boundary-class action: boundary_slope(h <> r) is the class
/// of h applied to boundary_slope(r).
inline std::optional<double> act_ideal(const MappingClass& h, const std::optional<double>& r) {
  MappingClass g = h.orientation_preserving() ? h : h * MappingClass::reflection();
  std::optional<double> rr = r;
  if (!h.orientation_preserving() && rr) rr = -*rr;  // reflection on the ideal line
  const auto& m = g.matrix();
  double a = static_cast<double>(m(0, 0)), b = static_cast<double>(m(0, 1));
  double c = static_cast<double>(m(1, 0)), d = static_cast<double>(m(1, 1));
  if (!rr) {
    if (c == 0.0) return std::nullopt;
    return -a / c;
  }
  double num = a * *rr - b, den = -c * *rr + d;
  if (den == 0.0) return std::nullopt;
  return num / den;
}

/// Exact projective version on rational ideal points p/q, with (1, 0)
/// encoding infinity.
inline std::pair<long long, long long> act_ideal_exact(const MappingClass& h, long long p,
                                                       long long q) {
  MappingClass g = h.orientation_preserving() ? h : h * MappingClass::reflection();
  if (!h.orientation_preserving()) p = -p;
  const auto& m = g.matrix();
  long long np = m(0, 0) * p - m(0, 1) * q;
  long long nq = -m(1, 0) * p + m(1, 1) * q;
  long long gg = std::gcd(std::abs(np), std::abs(nq));
  if (gg > 1) {
    np /= gg;
    nq /= gg;
  }
  if (nq < 0 || (nq == 0 && np < 0)) {
    np = -np;
    nq = -nq;
  }
  return {np, nq};
}

/// Seeded random word of length at most max_len in the rotation, the twist,
/// its inverse, and the reflection.
inline MappingClass random_mapping_class(Rng& rng, int max_len = 8) {
  MappingClass w = MappingClass::identity();
  int len = static_cast<int>(rng.range(1, max_len));
  for (int i = 0; i < len; ++i) {
    switch (rng.below(4)) {
      case 0: w = w * MappingClass::rotation(); break;
      case 1: w = w * MappingClass::twist(); break;
      case 2: w = w * MappingClass::twist_inverse(); break;
      default: w = w * MappingClass::reflection(); break;
    }
  }
  return w;
}

}  // namespace elg
