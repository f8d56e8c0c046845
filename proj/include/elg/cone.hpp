#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "elg/foliation.hpp"
#include "elg/slope_search.hpp"
#include "elg/teichmuller.hpp"

namespace elg {

/// Point of the Gardiner-Masur cone over torus Teichmuller space. On the
/// torus the boundary of the cone is exactly the space of measured
/// foliations, so three cases cover everything:
///
///   Zero               the cone vertex,
///   Interior(c, tau)   c times the unscaled lift of tau, i.e. the function
///                      alpha -> c Ext_tau(alpha)^{1/2},
///   Boundary(F)        a nonzero measured foliation, alpha -> I(alpha, F).
///
/// Boundary points constructed from rational data keep the exact pair
/// alongside the binary64 one; zero tests consult it when both sides have it.
class ConePoint {
public:
  enum class Kind { zero, interior, boundary };

  static ConePoint zero() { return ConePoint{}; }

  static ConePoint interior(double scale, const TeichPoint& tau) {
    if (!(scale > 0.0)) throw std::invalid_argument("interior cone point needs scale > 0");
    ConePoint a;
    a.kind_ = Kind::interior;
    a.scale_ = scale;
    a.tau_ = tau;
    return a;
  }

  static ConePoint boundary(const MF& f) {
    if (f.is_zero()) throw std::invalid_argument("boundary cone point needs a nonzero foliation");
    ConePoint a;
    a.kind_ = Kind::boundary;
    a.fol_ = f;
    return a;
  }

  static ConePoint boundary(const MFQ& f) {
    ConePoint a = boundary(to_double(f));
    a.exact_ = f;
    return a;
  }

  Kind kind() const { return kind_; }
  bool is_zero() const { return kind_ == Kind::zero; }
  bool is_interior() const { return kind_ == Kind::interior; }
  bool is_boundary() const { return kind_ == Kind::boundary; }

  double scale() const { return scale_; }
  const TeichPoint& tau() const { return tau_; }
  const MF& foliation() const { return fol_; }
  const std::optional<MFQ>& exact_foliation() const { return exact_; }

  /// Cone multiplication: s = 0 collapses to the vertex. Exact boundary data
  /// survives only the trivial scaling.
  friend ConePoint operator*(double s, const ConePoint& a) {
    if (s < 0.0) throw std::invalid_argument("cone points scale by nonnegative reals");
    if (s == 0.0 || a.is_zero()) return zero();
    if (s == 1.0) return a;
    if (a.is_interior()) return interior(s * a.scale_, a.tau_);
    return boundary(scaled(s, a.fol_));
  }

private:
  ConePoint() = default;

  Kind kind_ = Kind::zero;
  double scale_ = 0.0;
  TeichPoint tau_{0.0, 1.0};
  MF fol_{0.0, 0.0};
  std::optional<MFQ> exact_;
};

/// Point of the closure of Teichmuller space: either a marked structure or a
/// projective foliation class (stored as its canonical unit representative).
class ClosurePoint {
public:
  static ClosurePoint interior(const TeichPoint& t) {
    ClosurePoint p;
    p.interior_ = true;
    p.tau_ = t;
    return p;
  }
  static ClosurePoint boundary_class(const MF& f) {
    ClosurePoint p;
    p.interior_ = false;
    p.cls_ = normalize_projective(f);
    return p;
  }

  bool is_interior() const { return interior_; }
  const TeichPoint& point() const { return tau_; }
  const MF& cls() const { return cls_; }

private:
  ClosurePoint() = default;
  bool interior_ = true;
  TeichPoint tau_{0.0, 1.0};
  MF cls_{1.0, 0.0};
};

/// Point of the model cone: closure of Teichmuller space times a ray
/// coordinate, with the whole zero slice collapsed to the vertex.
struct ModelPoint {
  double t = 0.0;
  ClosurePoint p = ClosurePoint::interior(basepoint());

  ModelPoint(double t_, const ClosurePoint& p_) : t(t_), p(p_) {
    if (t < 0.0) throw std::invalid_argument("model points need t >= 0");
  }
  static ModelPoint vertex() { return ModelPoint{0.0, ClosurePoint::interior(basepoint())}; }

  bool is_vertex() const { return t == 0.0; }
};

inline ModelPoint model_interior(double t, const TeichPoint& tau) {
  return ModelPoint{t, ClosurePoint::interior(tau)};
}
inline ModelPoint model_boundary(double t, const MF& cls) {
  return ModelPoint{t, ClosurePoint::boundary_class(cls)};
}

/// Unscaled lift of a marked structure into the cone:
/// alpha -> Ext_tau(alpha)^{1/2}.
inline ConePoint lift_phi(const TeichPoint& tau) { return ConePoint::interior(1.0, tau); }

/// Basepoint-damped lift, the homeomorphism from the model cone onto the
/// cone. Interior slices are scaled by exp(-d_T(x0, .)); boundary classes
/// land on their unit-extremal-length representatives at x0, so the unit
/// slice of model foliations maps into { Ext_x0 = 1 }.
inline ConePoint lift_psi(const TeichPoint& x0, const ModelPoint& m) {
  if (m.is_vertex()) return ConePoint::zero();
  if (m.p.is_interior()) {
    const TeichPoint& z = m.p.point();
    return ConePoint::interior(m.t * std::exp(-teich_distance(x0, z)), z);
  }
  const MF& g = m.p.cls();
  double root_ext = std::sqrt(extremal_length(x0, g));
  return ConePoint::boundary(scaled(m.t / root_ext, g));
}

/// Inverse of the model map at basepoint x0.
inline ModelPoint lift_psi_inverse(const TeichPoint& x0, const ConePoint& a) {
  if (a.is_zero()) return ModelPoint::vertex();
  if (a.is_interior())
    return model_interior(a.scale() * std::exp(teich_distance(x0, a.tau())), a.tau());
  return model_boundary(std::sqrt(extremal_length(x0, a.foliation())), a.foliation());
}

/// The intersection pairing of the cone. Restricted to unscaled interior
/// lifts it exponentiates the Teichmuller distance; against boundary points
/// it evaluates square-root extremal length; on two foliations it is the
/// geometric intersection number. Symmetric and bihomogeneous.
inline double pairing_i(const ConePoint& a, const ConePoint& b) {
  if (a.is_zero() || b.is_zero()) return 0.0;
  if (a.is_interior() && b.is_interior())
    return a.scale() * b.scale() * std::exp(teich_distance(a.tau(), b.tau()));
  if (a.is_interior() && b.is_boundary())
    return a.scale() * std::sqrt(extremal_length(a.tau(), b.foliation()));
  if (a.is_boundary() && b.is_interior()) return pairing_i(b, a);
  return intersection(a.foliation(), b.foliation());
}

/// The pairing transported to the model cone at basepoint x0, in closed
/// form. Equals pairing_i(lift_psi(x0, m1), lift_psi(x0, m2)); on two
/// interior slice points it is exp(-2 <y|z>_{x0}). The expressions are
/// arranged so that swapping the arguments is an exact no-op.
inline double pairing_i_based(const TeichPoint& x0, const ModelPoint& m1, const ModelPoint& m2) {
  if (m1.is_vertex() || m2.is_vertex()) return 0.0;
  const bool i1 = m1.p.is_interior(), i2 = m2.p.is_interior();
  if (i1 && i2) {
    const TeichPoint &y = m1.p.point(), &z = m2.p.point();
    double d1 = teich_distance(x0, y), d2 = teich_distance(x0, z);
    return m1.t * m2.t * std::exp(teich_distance(y, z) - (d1 + d2));
  }
  if (i1 && !i2) {
    const TeichPoint& y = m1.p.point();
    const MF& g = m2.p.cls();
    return m1.t * m2.t * std::exp(-teich_distance(x0, y)) *
           std::sqrt(extremal_length(y, g) / extremal_length(x0, g));
  }
  if (!i1 && i2) return pairing_i_based(x0, m2, m1);
  const MF &f = m1.p.cls(), &g = m2.p.cls();
  return m1.t * m2.t * intersection(f, g) /
         (std::sqrt(extremal_length(x0, f)) * std::sqrt(extremal_length(x0, g)));
}

/// Intrinsic extremal length of a cone point as seen from y: degree-two
/// homogeneous, coincides with Ext_y on boundary foliations, and on interior
/// points equals scale^2 exp(2 d_T(y, tau)).
inline double ext_on_cone(const TeichPoint& y, const ConePoint& a) {
  switch (a.kind()) {
    case ConePoint::Kind::zero:
      return 0.0;
    case ConePoint::Kind::interior:
      return a.scale() * a.scale() * std::exp(2.0 * teich_distance(y, a.tau()));
    case ConePoint::Kind::boundary:
    default:
      return extremal_length(y, a.foliation());
  }
}

/// Model-side extremal length at basepoint x0 (the value of ext_on_cone
/// through lift_psi, in one closed form). Evaluating a slice point at
/// y == x0 gives exactly 1.
inline double ext_based(const TeichPoint& x0, const TeichPoint& y, const ModelPoint& m) {
  if (m.is_vertex()) return 0.0;
  if (m.p.is_interior()) {
    const TeichPoint& z = m.p.point();
    return m.t * m.t * std::exp(2.0 * (teich_distance(y, z) - teich_distance(x0, z)));
  }
  const MF& g = m.p.cls();
  return m.t * m.t * extremal_length(y, g) / extremal_length(x0, g);
}

/// Numerical route to the same quantity: maximize i(a, F)^2 / Ext_y(F) over
/// the slope circle (grid plus golden-section). Approaches ext_on_cone from
/// below as the grid refines.
inline double ext_sup_oracle(const TeichPoint& y, const ConePoint& a, int samples) {
  if (samples < 16) throw std::invalid_argument("extremal-length supremum needs >= 16 samples");
  auto ratio = [&](double theta) {
    MF f = slope_direction(theta);
    double v = pairing_i(a, ConePoint::boundary(f));
    return v * v / extremal_length(y, f);
  };
  return maximize_on_slopes(ratio, samples).value;
}

/// The boundary-extended extremal-length functions: for an interior point y
/// this is (Ext_y(F)/K_y)^{1/2} with K_y = exp(2 d_T(x0, y)); for a
/// projective class [G] it is I(F, G) normalized so the maximum over the
/// unit extremal-length sphere at x0 equals one.
inline double e_function(const TeichPoint& x0, const ClosurePoint& p, const MF& f) {
  if (p.is_interior())
    return std::exp(-teich_distance(x0, p.point())) * std::sqrt(extremal_length(p.point(), f));
  return intersection(f, p.cls()) / std::sqrt(extremal_length(x0, p.cls()));
}

/// Extension of the same family to the whole model cone:
/// E_{t y}(zeta) = t exp(-d_T(x0, y)) ext_based(x0, y, zeta)^{1/2}.
inline double e_extended(const TeichPoint& x0, double t, const TeichPoint& y,
                         const ModelPoint& zeta) {
  return t * std::exp(-teich_distance(x0, y)) * std::sqrt(ext_based(x0, y, zeta));
}

/// Gromov product on the closure: -(1/2) log of the based pairing, with +inf
/// exactly where the pairing vanishes. Restricted to interior pairs this is
/// the metric Gromov product at x0.
inline double gm_gromov_product(const TeichPoint& x0, const ClosurePoint& p,
                                const ClosurePoint& q) {
  double v = pairing_i_based(x0, ModelPoint{1.0, p}, ModelPoint{1.0, q});
  if (v == 0.0) return std::numeric_limits<double>::infinity();
  return -0.5 * std::log(v);
}

/// Null-space membership test: do a and b pair to zero? Exact intersection
/// arithmetic when both sides are rational boundary points; otherwise the
/// pairing is compared against tol relative to the geometric scale
/// ext(x0, a)^{1/2} ext(x0, b)^{1/2}.
inline bool null_test(const ConePoint& a, const ConePoint& b, double tol = 1e-12,
                      const TeichPoint& x0 = basepoint()) {
  if (a.is_boundary() && b.is_boundary() && a.exact_foliation() && b.exact_foliation())
    return intersection(*a.exact_foliation(), *b.exact_foliation()) == Rational(0);
  double scale = std::sqrt(ext_on_cone(x0, a)) * std::sqrt(ext_on_cone(x0, b));
  return pairing_i(a, b) <= tol * scale;
}

/// Three-valued verdict for membership of eta in the sup-defined
/// neighborhood U_delta(zeta).
struct NeighborhoodVerdict {
  enum class Value { inside, outside, unknown };
  Value value = Value::unknown;
  /// bound - sup |i(eta, .) - i(zeta, .)|; positive means inside.
  double margin = 0.0;

  bool inside() const { return value == Value::inside; }
  bool outside() const { return value == Value::outside; }
};

/// Decides eta in U_delta(zeta) by maximizing |i_{x0}(eta, xi) - i_{x0}(zeta, xi)|
/// over the unit slice of model foliations xi (where the xi-side normalizer
/// is identically one) and comparing with delta ext(zeta)^{1/2}. The verdict
/// degrades to unknown when the margin sits within ten machine epsilons of
/// the boundary, since the supremum itself is a numerical quantity.
inline NeighborhoodVerdict in_neighborhood(const TeichPoint& x0, const ModelPoint& zeta,
                                           const ModelPoint& eta, double delta, int samples) {
  if (!(delta > 0.0)) throw std::invalid_argument("neighborhood radius must be positive");
  if (samples < 64) throw std::invalid_argument("neighborhood test needs >= 64 samples");

  auto gap = [&](double theta) {
    ModelPoint xi = model_boundary(1.0, slope_direction(theta));
    return std::abs(pairing_i_based(x0, eta, xi) - pairing_i_based(x0, zeta, xi));
  };
  double sup = maximize_on_slopes(gap, samples).value;
  double bound = zeta.is_vertex() ? delta : delta * std::sqrt(ext_based(x0, x0, zeta));

  NeighborhoodVerdict v;
  v.margin = bound - sup;
  double guard = 10.0 * std::numeric_limits<double>::epsilon() *
                 std::max({1.0, bound, sup});
  if (v.margin > guard)
    v.value = NeighborhoodVerdict::Value::inside;
  else if (v.margin < -guard)
    v.value = NeighborhoodVerdict::Value::outside;
  return v;
}

}  // namespace elg
