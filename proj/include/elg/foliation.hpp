#pragma once

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "elg/rational.hpp"

namespace elg {

/// Measured foliation on the torus: a homology weight pair (a, b), i.e. the
/// leaf direction together with its transverse measure collapsed to one
/// weighted slope. Templated on the scalar so the same formulas run in
/// binary64 or in exact rational arithmetic.
template <typename Scalar>
struct Foliation {
  Scalar a{};
  Scalar b{};

  bool is_zero() const { return a == Scalar(0) && b == Scalar(0); }

  friend bool operator==(const Foliation& f, const Foliation& g) {
    return f.a == g.a && f.b == g.b;
  }
};

using MF = Foliation<double>;
using MFQ = Foliation<Rational>;

inline MF to_double(const MFQ& f) { return MF{f.a.to_double(), f.b.to_double()}; }

template <typename Scalar>
Foliation<Scalar> scaled(const Scalar& s, const Foliation<Scalar>& f) {
  return {s * f.a, s * f.b};
}

/// Geometric intersection number I(F, G) = |a_F b_G - b_F a_G|. Symmetric,
/// bilinear under nonnegative scaling, and zero exactly on proportional
/// pairs, which makes every nonzero torus foliation uniquely ergodic.
template <typename Scalar>
Scalar intersection(const Foliation<Scalar>& f, const Foliation<Scalar>& g) {
  using std::abs;
  return abs(f.a * g.b - f.b * g.a);
}

/// Projective normalization: unit Euclidean norm with the sign convention
/// b > 0, or b = 0 and a > 0 (upper half-circle representatives, so that
/// F and -F pick the same class). Rejects the zero foliation.
inline MF normalize_projective(const MF& f) {
  if (f.a == 0.0 && f.b == 0.0)
    throw std::invalid_argument("zero foliation has no projective class");
  double s = std::hypot(f.a, f.b);
  MF n{f.a / s, f.b / s};
  if (n.b < 0.0 || (n.b == 0.0 && n.a < 0.0)) {
    n.a = -n.a;
    n.b = -n.b;
  }
  return n;
}

/// Clears denominators and signs to the canonical coprime integer pair in
/// the projective class of a nonzero rational foliation.
inline MFQ primitive_class(const MFQ& f) {
  if (f.is_zero())
    throw std::invalid_argument("zero foliation has no projective class");
  long long p = f.a.num() * f.b.den();
  long long q = f.b.num() * f.a.den();
  long long g = std::gcd(std::abs(p), std::abs(q));
  p /= g;
  q /= g;
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  return MFQ{Rational(p), Rational(q)};
}

/// A free homotopy class of simple closed curves: a coprime integer pair in
/// canonical sign (q > 0, or q = 0 and p = 1).
struct CurveClass {
  long long p = 1;
  long long q = 0;

  MF foliation() const { return MF{static_cast<double>(p), static_cast<double>(q)}; }
  MFQ foliation_exact() const { return MFQ{Rational(p), Rational(q)}; }

  friend bool operator==(const CurveClass& x, const CurveClass& y) {
    return x.p == y.p && x.q == y.q;
  }
  friend bool operator<(const CurveClass& x, const CurveClass& y) {
    return x.p != y.p ? x.p < y.p : x.q < y.q;
  }
};

/// All canonical coprime classes with |p| <= N and 0 <= q <= N, in
/// lexicographic (p, q) order. Deterministic truncation of the full curve
/// set used by function vectors and the sup pseudo-distance.
inline std::vector<CurveClass> curve_family(int n) {
  if (n < 1) throw std::invalid_argument("curve family requires N >= 1");
  std::vector<CurveClass> fam;
  for (long long p = -n; p <= n; ++p) {
    for (long long q = 0; q <= n; ++q) {
      if (p == 0 && q == 0) continue;
      if (q == 0 && p != 1) continue;  // (p, 0) ~ (1, 0) canonically
      if (std::gcd(std::abs(p), q) != 1) continue;
      fam.push_back(CurveClass{p, q});
    }
  }
  return fam;
}

}  // namespace elg
