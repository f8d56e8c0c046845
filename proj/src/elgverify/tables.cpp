#include "elgverify/tables.hpp"

#include <cstdio>
#include <optional>
#include <stdexcept>

#include "elg/function_vector.hpp"

namespace elg::verify {
namespace {

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const char* kind_name(const ConePoint& a) {
  switch (a.kind()) {
    case ConePoint::Kind::zero: return "zero";
    case ConePoint::Kind::interior: return "interior";
    default: return "boundary";
  }
}

}  // namespace

std::string pair_csv(const VerifyConfig& cfg, const std::vector<ConePoint>& pts) {
  std::string csv = "i,j,kind_i,kind_j,pairing,distance,gromov\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const ConePoint &a = pts[i], &b = pts[j];
      csv += std::to_string(i) + "," + std::to_string(j) + "," + kind_name(a) + "," +
             kind_name(b) + "," + num(pairing_i(a, b));
      if (a.is_interior() && b.is_interior()) {
        csv += "," + num(teich_distance(a.tau(), b.tau()));
        csv += "," + num(gromov_product(cfg.x0, a.tau(), b.tau()));
      } else {
        csv += ",,";
      }
      csv += "\n";
    }
  }
  return csv;
}

std::string converge_csv(const VerifyConfig& cfg, const std::string& mode,
                         const ConvergeOptions& opt) {
  if (mode == "dinf") {
    std::string csv = "N,d_inf,d_teich,gap\n";
    double d = teich_distance(opt.from, opt.to);
    std::vector<int> ns;
    for (int n : {1, 2, 3, 5, 8, 10, 15, 20, 25, 35, 50})
      if (n < cfg.truncation) ns.push_back(n);
    ns.push_back(cfg.truncation);
    for (int n : ns) {
      double v = d_infinity(phi_function(opt.from, n), phi_function(opt.to, n));
      csv += std::to_string(n) + "," + num(v) + "," + num(d) + "," + num(d - v) + "\n";
    }
    return csv;
  }

  if (mode == "radial") {
    std::string csv = "t,pairing,limit,abs_error\n";
    std::optional<double> r;
    if (!opt.slope_infinity) r = opt.slope;
    MF cls = boundary_slope(r);
    ModelPoint target = model_interior(1.0, opt.from);
    double limit = pairing_i_based(cfg.x0, target, model_boundary(1.0, cls));
    for (int t = 0; t <= 20; ++t) {
      TeichPoint zt = geodesic_ray(cfg.x0, cls, static_cast<double>(t));
      double v = pairing_i_based(cfg.x0, target, model_interior(1.0, zt));
      csv += std::to_string(t) + "," + num(v) + "," + num(limit) + "," +
             num(std::abs(v - limit)) + "\n";
    }
    return csv;
  }

  if (mode == "gromov-boundary") {
    std::string csv = "t,gromov,limit,abs_error\n";
    MFQ fq = primitive_class(MFQ{Rational(opt.fp), Rational(opt.fq)});
    MFQ gq = primitive_class(MFQ{Rational(opt.gp), Rational(opt.gq)});
    MF f = to_double(fq), g = to_double(gq);
    double limit = gm_gromov_product(cfg.x0, ClosurePoint::boundary_class(f),
                                     ClosurePoint::boundary_class(g));
    for (int t = 0; t <= 20; ++t) {
      TeichPoint yt = geodesic_ray(cfg.x0, normalize_projective(f), static_cast<double>(t));
      TeichPoint zt = geodesic_ray(cfg.x0, normalize_projective(g), static_cast<double>(t));
      double v = gromov_product(cfg.x0, yt, zt);
      csv += std::to_string(t) + "," + num(v) + "," + num(limit) + "," +
             num(std::abs(v - limit)) + "\n";
    }
    return csv;
  }

  throw std::invalid_argument("unknown convergence mode: " + mode);
}

}  // namespace elg::verify
