#pragma once

#include <stdexcept>

#include "elg/rational.hpp"

namespace elg {

/// Point of the line-with-frames space: the real line with, for every n >= 1,
/// the boundary frame of [-n, n] x [0, n] glued along its bottom edge.
/// Frame points carry the arc position l in [0, 4n] measured from the corner
/// (-n, 0) up the left edge, across the top, down the right edge; l = 0 and
/// l = 4n are identified with the line points -n and n, so the factory
/// canonicalizes them away. All data is piecewise linear, so the default
/// scalar is the exact rational.
template <typename Scalar = Rational>
struct WalshPoint {
  bool on_line = true;
  Scalar line_pos{};  // position on the line when on_line
  long long n = 0;    // frame index otherwise
  Scalar arc{};       // arc position in (0, 4n)

  static WalshPoint line(const Scalar& s) {
    WalshPoint p;
    p.on_line = true;
    p.line_pos = s;
    return p;
  }

  static WalshPoint frame(long long n, const Scalar& arc) {
    if (n < 1) throw std::invalid_argument("frame index must be positive");
    if (arc < Scalar(0) || arc > Scalar(4 * n))
      throw std::invalid_argument("frame arc position out of [0, 4n]");
    if (arc == Scalar(0)) return line(Scalar(-n));
    if (arc == Scalar(4 * n)) return line(Scalar(n));
    WalshPoint p;
    p.on_line = false;
    p.n = n;
    p.arc = arc;
    return p;
  }

  friend bool operator==(const WalshPoint& p, const WalshPoint& q) {
    if (p.on_line != q.on_line) return false;
    return p.on_line ? p.line_pos == q.line_pos : (p.n == q.n && p.arc == q.arc);
  }
};

using WalshPointQ = WalshPoint<Rational>;

/// The basepoint 0 on the line.
inline WalshPointQ walsh_basepoint() { return WalshPointQ::line(Rational(0)); }

/// The four marked points of frame n: the bottom corners on the line and the
/// top corners at arc positions n and 3n.
inline WalshPointQ walsh_x1(long long n) { return WalshPointQ::line(Rational(-n)); }
inline WalshPointQ walsh_x2(long long n) { return WalshPointQ::line(Rational(n)); }
inline WalshPointQ walsh_y1(long long n) { return WalshPointQ::frame(n, Rational(n)); }
inline WalshPointQ walsh_y2(long long n) { return WalshPointQ::frame(n, Rational(3 * n)); }

namespace detail {

/// Arc length from a frame position to the bottom-left (exit 0) or
/// bottom-right (exit 1) corner.
template <typename Scalar>
Scalar arc_to_corner(long long n, const Scalar& arc, int corner) {
  return corner == 0 ? arc : Scalar(4 * n) - arc;
}

}  // namespace detail

/// Shortest-path distance in the glued space. Frames meet the line only at
/// their bottom corners, which pins the routing down to a finite minimum:
/// along the line, around one frame, or corner-line-corner between frames.
template <typename Scalar>
Scalar walsh_distance(const WalshPoint<Scalar>& p, const WalshPoint<Scalar>& q) {
  using std::abs;
  using std::min;
  if (p.on_line && q.on_line) return abs(p.line_pos - q.line_pos);
  if (p.on_line) return walsh_distance(q, p);

  if (q.on_line) {
    Scalar via_left = p.arc + abs(Scalar(-p.n) - q.line_pos);
    Scalar via_right = (Scalar(4 * p.n) - p.arc) + abs(Scalar(p.n) - q.line_pos);
    return min(via_left, via_right);
  }

  if (p.n == q.n) {
    Scalar along = abs(p.arc - q.arc);
    Scalar lr = p.arc + Scalar(2 * p.n) + (Scalar(4 * p.n) - q.arc);
    Scalar rl = (Scalar(4 * p.n) - p.arc) + Scalar(2 * p.n) + q.arc;
    return min(along, min(lr, rl));
  }

  Scalar best{};
  bool first = true;
  for (int cp = 0; cp < 2; ++cp) {
    for (int cq = 0; cq < 2; ++cq) {
      Scalar leg1 = detail::arc_to_corner(p.n, p.arc, cp);
      Scalar leg2 = detail::arc_to_corner(q.n, q.arc, cq);
      Scalar line_leg = abs(Scalar(cp == 0 ? -p.n : p.n) - Scalar(cq == 0 ? -q.n : q.n));
      Scalar total = leg1 + line_leg + leg2;
      if (first || total < best) {
        best = total;
        first = false;
      }
    }
  }
  return best;
}

/// Gromov product at the basepoint 0.
template <typename Scalar>
Scalar walsh_gromov(const WalshPoint<Scalar>& p, const WalshPoint<Scalar>& q) {
  WalshPoint<Scalar> b0 = WalshPoint<Scalar>::line(Scalar(0));
  return (walsh_distance(b0, p) + walsh_distance(b0, q) - walsh_distance(p, q)) / Scalar(2);
}

/// Normalized distance function h_q(p) = d(p, q) - d(b0, q), whose limits in
/// q are the horofunctions of the space.
template <typename Scalar>
Scalar horofunction(const WalshPoint<Scalar>& q, const WalshPoint<Scalar>& p) {
  WalshPoint<Scalar> b0 = WalshPoint<Scalar>::line(Scalar(0));
  return walsh_distance(p, q) - walsh_distance(b0, q);
}

}  // namespace elg
