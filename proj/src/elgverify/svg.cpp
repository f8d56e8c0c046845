#include "elgverify/svg.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "elg/cone.hpp"

namespace elg::verify {
namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

constexpr double kWidth = 800.0, kHeight = 440.0;

std::string svg_open() {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" "
         "height=\"440\" viewBox=\"0 0 800 440\">\n";
}

struct HalfPlaneMap {
  double xmin, xmax, ymax;
  double px(double x) const { return 20.0 + (x - xmin) / (xmax - xmin) * (kWidth - 40.0); }
  double py(double y) const { return (kHeight - 20.0) - y / ymax * (kHeight - 40.0); }
};

/// Ideal endpoints of the full geodesic through a and b, ordered so the
/// second one lies forward of a in the direction of b. nullopt = infinity.
std::pair<std::optional<double>, std::optional<double>> ideal_endpoints(const TeichPoint& a,
                                                                        const TeichPoint& b) {
  if (a.x == b.x) {
    std::optional<double> down = a.x;  // encoded as the finite end
    if (b.y > a.y) return {down, std::nullopt};
    return {std::nullopt, down};
  }
  double c = (a.x * a.x + a.y * a.y - b.x * b.x - b.y * b.y) / (2.0 * (a.x - b.x));
  double r = std::hypot(a.x - c, a.y);
  if (b.x > a.x) return {std::optional<double>(c - r), std::optional<double>(c + r)};
  return {std::optional<double>(c + r), std::optional<double>(c - r)};
}

std::string plot_geodesic(const VerifyConfig&, const PlotOptions& opt) {
  const TeichPoint &a = opt.from, &b = opt.to;
  auto [back, fwd] = ideal_endpoints(a, b);

  double span = std::max({std::abs(a.x), std::abs(b.x), back ? std::abs(*back) : 0.0,
                          fwd ? std::abs(*fwd) : 0.0, 2.0}) +
                1.0;
  double top = std::max({a.y, b.y, 2.0}) * 1.6;
  HalfPlaneMap m{-span, span, top};

  std::string svg = svg_open();
  svg += "  <line x1=\"" + num(m.px(-span)) + "\" y1=\"" + num(m.py(0)) + "\" x2=\"" +
         num(m.px(span)) + "\" y2=\"" + num(m.py(0)) + "\" stroke=\"black\"/>\n";

  // one path for the geodesic
  std::vector<std::pair<double, double>> pts;
  if (a.x == b.x) {
    for (int k = 0; k <= 128; ++k) {
      double y = 0.02 + (top - 0.02) * k / 128.0;
      pts.emplace_back(a.x, y);
    }
  } else {
    double c = 0.5 * (*back + *fwd);
    double r = std::abs(*fwd - *back) / 2.0;
    for (int k = 0; k <= 128; ++k) {
      double phi = 3.13 - 3.10 * k / 128.0;  // stay strictly inside the half-plane
      pts.emplace_back(c + r * std::cos(phi), r * std::sin(phi));
    }
  }
  svg += "  <path fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" d=\"M";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    svg += (i ? " L" : " ") + num(m.px(pts[i].first)) + " " + num(m.py(pts[i].second));
  }
  svg += "\"/>\n";

  // two ideal endpoint markers
  auto marker = [&](const std::optional<double>& r) {
    double cx = r ? m.px(*r) : m.px(a.x == b.x ? a.x : 0.0);
    double cy = r ? m.py(0.0) : m.py(top);
    return "  <circle class=\"ideal-endpoint\" cx=\"" + num(cx) + "\" cy=\"" + num(cy) +
           "\" r=\"5\" fill=\"firebrick\"/>\n";
  };
  svg += marker(back);
  svg += marker(fwd);

  for (const TeichPoint* t : {&a, &b})
    svg += "  <circle cx=\"" + num(m.px(t->x)) + "\" cy=\"" + num(m.py(t->y)) +
           "\" r=\"3\" fill=\"black\"/>\n";
  svg += "</svg>\n";
  return svg;
}

std::string plot_embedding(const VerifyConfig& cfg, const PlotOptions& opt) {
  // function-space coordinates at three curve classes, isometric projection
  const MF c1{1.0, 0.0}, c2{0.0, 1.0}, c3{1.0, 1.0};
  auto project = [&](double u, double v, double w) {
    return std::pair<double, double>{(u - v) * 0.8660254037844386, (u + v) * 0.5 - w};
  };

  auto [back, fwd] = ideal_endpoints(opt.from, opt.to);
  MF fwd_cls = boundary_slope(fwd), back_cls = boundary_slope(back);

  std::vector<std::pair<double, double>> phi_curve, psi_curve;
  for (int k = 0; k <= 80; ++k) {
    double s = -2.0 + 4.0 * k / 80.0;
    TeichPoint tau = s >= 0.0 ? geodesic_ray(opt.from, fwd_cls, s)
                              : geodesic_ray(opt.from, back_cls, -s);
    double u = std::sqrt(extremal_length(tau, c1));
    double v = std::sqrt(extremal_length(tau, c2));
    double w = std::sqrt(extremal_length(tau, c3));
    double damp = std::exp(-teich_distance(cfg.x0, tau));
    phi_curve.push_back(project(u, v, w));
    psi_curve.push_back(project(damp * u, damp * v, damp * w));
  }

  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& c : {phi_curve, psi_curve}) {
    for (auto [x, y] : c) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  double sx = (kWidth - 80.0) / std::max(xmax - xmin, 1e-9);
  double sy = (kHeight - 80.0) / std::max(ymax - ymin, 1e-9);
  double sc = std::min(sx, sy);
  auto vx = [&](double x) { return 40.0 + (x - xmin) * sc; };
  auto vy = [&](double y) { return (kHeight - 40.0) - (y - ymin) * sc; };

  std::string svg = svg_open();
  auto polyline = [&](const std::vector<std::pair<double, double>>& c, const char* color) {
    std::string s = "  <polyline fill=\"none\" stroke=\"";
    s += color;
    s += "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += " ";
      s += num(vx(c[i].first)) + "," + num(vy(c[i].second));
    }
    return s + "\"/>\n";
  };
  svg += polyline(phi_curve, "steelblue");   // unit self-pairing sheet
  svg += polyline(psi_curve, "darkorange");  // damped slice, bounded
  svg += "  <text x=\"40\" y=\"24\" font-size=\"13\">unit-self-pairing lift (blue) vs "
         "basepoint-damped slice (orange)</text>\n";
  svg += "</svg>\n";
  return svg;
}

std::string plot_walsh(const PlotOptions& opt) {
  int n_max = std::max(1, opt.walsh_frames);
  double span = n_max + 1.0;
  HalfPlaneMap m{-span, span, span};

  std::string svg = svg_open();
  svg += "  <line x1=\"" + num(m.px(-span)) + "\" y1=\"" + num(m.py(0)) + "\" x2=\"" +
         num(m.px(span)) + "\" y2=\"" + num(m.py(0)) + "\" stroke=\"black\" "
         "stroke-width=\"2\"/>\n";
  for (int n = 1; n <= n_max; ++n) {
    double x0 = m.px(-n), y0 = m.py(n);
    double w = m.px(n) - m.px(-n);
    double h = m.py(0) - m.py(n);
    svg += "  <rect x=\"" + num(x0) + "\" y=\"" + num(y0) + "\" width=\"" + num(w) +
           "\" height=\"" + num(h) + "\" fill=\"none\" stroke=\"steelblue\" "
           "stroke-width=\"1.5\"/>\n";
  }
  svg += "  <circle cx=\"" + num(m.px(0)) + "\" cy=\"" + num(m.py(0)) +
         "\" r=\"4\" fill=\"firebrick\"/>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace

std::string plot_svg(const VerifyConfig& cfg, const std::string& what, const PlotOptions& opt) {
  if (what == "geodesic") return plot_geodesic(cfg, opt);
  if (what == "embedding") return plot_embedding(cfg, opt);
  if (what == "walsh") return plot_walsh(opt);
  throw std::invalid_argument("unknown plot: " + what);
}

}  // namespace elg::verify
