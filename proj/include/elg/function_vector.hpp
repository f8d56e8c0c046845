#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "elg/cone.hpp"
#include "elg/foliation.hpp"

namespace elg {

/// Finite-dimensional avatar of a cone point: its pairing values on a
/// truncated curve family, kept in family order.
struct FunctionVector {
  std::vector<CurveClass> family;
  Eigen::VectorXd values;
};

/// Evaluates the cone point lift_psi(x0, m) against every class of
/// curve_family(n). At interior slice points the projective class of the
/// result is the Gardiner-Masur embedding of the point.
inline FunctionVector model_to_function(const TeichPoint& x0, const ModelPoint& m, int n) {
  FunctionVector out;
  out.family = curve_family(n);
  out.values.resize(static_cast<Eigen::Index>(out.family.size()));
  ConePoint a = lift_psi(x0, m);
  for (Eigen::Index i = 0; i < out.values.size(); ++i) {
    if (a.is_zero()) {
      out.values[i] = 0.0;
      continue;
    }
    out.values[i] = pairing_i(a, ConePoint::boundary(out.family[i].foliation()));
  }
  return out;
}

/// Function vector of the unscaled lift of an interior point,
/// alpha -> Ext_tau(alpha)^{1/2}.
inline FunctionVector phi_function(const TeichPoint& tau, int n) {
  FunctionVector out;
  out.family = curve_family(n);
  out.values.resize(static_cast<Eigen::Index>(out.family.size()));
  for (Eigen::Index i = 0; i < out.values.size(); ++i)
    out.values[i] = std::sqrt(extremal_length(tau, out.family[i].foliation()));
  return out;
}

/// Sup pseudo-distance log sup_alpha max(f/g, g/f) over the common family.
/// Entries where both functions vanish are skipped; an entry where exactly
/// one vanishes forces +inf. Identical supports with no surviving entries
/// (two vertex vectors) give 0.
inline double d_infinity(const FunctionVector& f, const FunctionVector& g) {
  if (f.family != g.family)
    throw std::invalid_argument("sup distance needs matching curve families");
  double worst = 1.0;
  bool any = false;
  for (Eigen::Index i = 0; i < f.values.size(); ++i) {
    double a = f.values[i], b = g.values[i];
    if (a == 0.0 && b == 0.0) continue;
    if (a == 0.0 || b == 0.0) return std::numeric_limits<double>::infinity();
    any = true;
    worst = std::max(worst, std::max(a / b, b / a));
  }
  return any ? std::log(worst) : 0.0;
}

}  // namespace elg
