#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "elg/foliation.hpp"

namespace elg {

/// Direction on the projective slope circle, as a unit foliation.
inline MF slope_direction(double theta) { return MF{std::cos(theta), std::sin(theta)}; }

struct SlopeMax {
  double theta = 0.0;
  double value = 0.0;
};

/// Maximizes a pi-periodic functional over the slope circle: uniform grid of
/// the given size followed by golden-section refinement of the bracket
/// around the best sample, down to ~1e-12 in the angle.
template <typename Fn>
SlopeMax maximize_on_slopes(Fn&& f, int samples) {
  if (samples < 2) throw std::invalid_argument("slope search needs at least 2 samples");
  constexpr double kPi = 3.14159265358979323846;
  double step = kPi / samples;

  SlopeMax best;
  best.theta = 0.0;
  best.value = f(0.0);
  for (int k = 1; k < samples; ++k) {
    double th = step * k;
    double v = f(th);
    if (v > best.value) best = SlopeMax{th, v};
  }

  // Golden-section on the bracket [theta* - step, theta* + step].
  constexpr double kInvPhi = 0.6180339887498949;
  double lo = best.theta - step, hi = best.theta + step;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  while (hi - lo > 1e-12) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
    }
  }
  double mid = 0.5 * (lo + hi);
  double fm = f(mid);
  if (fm > best.value) best = SlopeMax{mid, fm};
  if (f1 > best.value) best = SlopeMax{x1, f1};
  if (f2 > best.value) best = SlopeMax{x2, f2};
  return best;
}

}  // namespace elg
