#include "elgverify/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "elg/cone.hpp"
#include "elg/foliation.hpp"
#include "elg/function_vector.hpp"
#include "elg/mapping_class.hpp"
#include "elg/rng.hpp"
#include "elg/walsh.hpp"
#include "elgverify/oracles.hpp"

namespace elg::verify {
namespace {

// ---------------------------------------------------------------------------
// samplers

TeichPoint rand_teich(Rng& rng) { return TeichPoint{rng.uniform(-3.0, 3.0), rng.uniform(0.25, 4.0)}; }

MF rand_mf(Rng& rng) {
  for (;;) {
    MF f{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
    if (std::hypot(f.a, f.b) > 1e-2) return f;
  }
}

MFQ rand_mfq(Rng& rng) {
  for (;;) {
    MFQ f{Rational(rng.range(-30, 30), rng.range(1, 10)),
          Rational(rng.range(-30, 30), rng.range(1, 10))};
    if (!f.is_zero()) return f;
  }
}

MFQ rand_curve_class(Rng& rng) {
  for (;;) {
    long long p = rng.range(-20, 20), q = rng.range(-20, 20);
    if (p == 0 && q == 0) continue;
    return primitive_class(MFQ{Rational(p), Rational(q)});
  }
}

ConePoint rand_cone_point(Rng& rng, bool allow_zero = false) {
  std::uint64_t k = rng.below(allow_zero ? 5 : 4);
  if (k == 4) return ConePoint::zero();
  if (k < 2) return ConePoint::interior(rng.uniform(0.25, 4.0), rand_teich(rng));
  return ConePoint::boundary(scaled(rng.uniform(0.25, 4.0), normalize_projective(rand_mf(rng))));
}

ModelPoint rand_model_point(Rng& rng, bool allow_vertex = false) {
  std::uint64_t k = rng.below(allow_vertex ? 5 : 4);
  if (k == 4) return ModelPoint::vertex();
  double t = rng.uniform(0.25, 4.0);
  if (k < 2) return model_interior(t, rand_teich(rng));
  return model_boundary(t, rand_mf(rng));
}

double rel(double err, double scale) { return err / std::max(1.0, std::abs(scale)); }

// ---------------------------------------------------------------------------
// registry

struct Outcome {
  double max_error = 0.0;
  long long trials = 0;
};

struct Property {
  std::string id;
  std::string statement;
  bool exact = false;
  double floor = 0.0;  // attainable resolution of the check itself
  std::function<Outcome(const VerifyConfig&, Rng&)> run;
};

// ---------------------------------------------------------------------------
// foliation suite

Outcome p_intersection_symmetry(const VerifyConfig& cfg, Rng& rng) {
  Outcome out{0.0, cfg.trials};
  for (int k = 0; k < cfg.trials; ++k) {
    MFQ f = rand_mfq(rng), g = rand_mfq(rng);
    if (intersection(f, g) != intersection(g, f)) out.max_error = 1.0;
  }
  return out;
}

Outcome p_intersection_bilinear(const VerifyConfig& cfg, Rng& rng) {
  Outcome out{0.0, cfg.trials};
  for (int k = 0; k < cfg.trials; ++k) {
    MFQ f = rand_mfq(rng), g = rand_mfq(rng);
    Rational s(rng.range(0, 12), rng.range(1, 7)), t(rng.range(0, 12), rng.range(1, 7));
    if (intersection(scaled(s, f), scaled(t, g)) != s * t * intersection(f, g))
      out.max_error = 1.0;
  }
  return out;
}

Outcome p_null_dichotomy(const VerifyConfig& cfg, Rng& rng) {
  Outcome out{0.0, cfg.trials};
  for (int k = 0; k < cfg.trials; ++k) {
    MFQ f = rand_mfq(rng);
    MFQ g = (k % 2 == 0) ? scaled(Rational(rng.range(0, 9), rng.range(1, 5)), f)
                         : rand_mfq(rng);
    // component-ratio route to proportionality, independent of the
    // determinant formula under test
    bool proportional;
    if (g.is_zero() || f.is_zero()) {
      proportional = true;
    } else if (f.a != Rational(0)) {
      proportional = scaled(g.a / f.a, f) == g;
    } else {
      proportional = scaled(g.b / f.b, f) == g;
    }
    bool null = intersection(f, g) == Rational(0);
    if (null != proportional) out.max_error = 1.0;
  }
  return out;
}

Outcome p_normalize_projective(const VerifyConfig& cfg, Rng& rng) {
  Outcome out{0.0, cfg.trials};
  for (int k = 0; k < cfg.trials; ++k) {
    MF f = rand_mf(rng);
    MF n1 = normalize_projective(f);
    MF n2 = normalize_projective(n1);
    MF ns = normalize_projective(scaled(rng.uniform(0.01, 50.0), f));
    out.max_error = std::max({out.max_error, std::abs(n2.a - n1.a), std::abs(n2.b - n1.b),
                              std::abs(ns.a - n1.a), std::abs(ns.b - n1.b)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// teich suite

Outcome p_minsky_inequality(const VerifyConfig& cfg, Rng& rng) {
  Outcome out{0.0, cfg.trials};
  for (int k = 0; k < cfg.trials; ++k) {
    TeichPoint t = rand_teich(rng);
    MF f = rand_mf(rng), g = rand_mf(rng);
    double lhs = intersection(f, g);
    double prod = extremal_length(t, f) * extremal_length(t, g);
    out.max_error = std::max(out.max_error, std::max(0.0, lhs * lhs - prod) / prod);
  }
  return out;
}

Outcome p_minsky_sharpness(const VerifyConfig& cfg, Rng& rng) {
  Outcome out{0.0, cfg.trials};
  for (int k = 0; k < cfg.trials; ++k) {
    TeichPoint t = rand_teich(rng);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(extremal_form(t));
    MF f{es.eigenvectors()(0, 0), es.eigenvectors()(1, 0)};
    MF g{es.eigenvectors()(0, 1), es.eigenvectors()(1, 1)};
    double lhs = intersection(f, g);
    double prod = extremal_length(t, f) * extremal_length(t, g);
    out.max_error = std::max(out.max_error, std::abs(lhs * lhs - prod) / prod);

    // the unique sharp partner of a random foliation
    MF h = rand_mf(rng);
    Eigen::Vector2d mh = extremal_form(t) * Eigen::Vector2d(h.a, h.b);
    MF partner{-mh.y(), mh.x()};
    double l2 = intersection(h, partner);
    double p2 = extremal_length(t, h) * extremal_length(t, partner);
    out.max_error = std::max(out.max_error, std::abs(l2 * l2 - p2) / p2);
  }
  return out;
}

Outcome p_metric_axioms(const VerifyConfig& cfg, Rng& rng) {
  Outcome out{0.0, cfg.trials};
  for (int k = 0; k < cfg.trials; ++k) {
    TeichPoint a = rand_teich(rng), b = rand_teich(rng), c = rand_teich(rng);
    double dab = teich_distance(a, b);
    out.max_error = std::max(out.max_error, std::abs(dab - teich_distance(b, a)));
    out.max_error = std::max(out.max_error, teich_distance(a, a));
    double viol = teich_distance(a, c) - (dab + teich_distance(b, c));
    out.max_error = std::max(out.max_error, std::max(0.0, viol));
  }
  return out;
}

Outcome p_kerckhoff_grid(const VerifyConfig& cfg, Rng& rng) {
  Outcome out{0.0, cfg.trials};
  for (int k = 0; k < cfg.trials; ++k) {
    TeichPoint a = rand_teich(rng), b = rand_teich(rng);
    double d = teich_distance(a, b);
    double dg = oracle::grid_sup_distance(a, b, cfg.samples);
    out.max_error = std::max(out.max_error, std::abs(d - dg));
  }
  return out;
}

Outcome p_kerckhoff_sharp_pair(const VerifyConfig& cfg, Rng& rng) {
  Outcome out{0.0, cfg.trials};
  for (int k = 0; k < cfg.trials; ++k) {
    TeichPoint a = rand_teich(rng), b = rand_teich(rng);
    KerckhoffPair kp = kerckhoff_sup(a, b, cfg.x0);
    if (kp.isotropic) continue;
    double rf = extremal_length(a, kp.maximizer) / extremal_length(b, kp.maximizer);
    double rg = extremal_length(b, kp.minimizer) / extremal_length(a, kp.minimizer);
    out.max_error = std::max(out.max_error, std::abs(rf - kp.lambda_max) / kp.lambda_max);
    out.max_error = std::max(out.max_error, std::abs(rg - kp.lambda_max) / kp.lambda_max);
    out.max_error = std::max(out.max_error, std::abs(extremal_length(cfg.x0, kp.maximizer) - 1.0));
    out.max_error = std::max(out.max_error, std::abs(extremal_length(cfg.x0, kp.minimizer) - 1.0));
    out.max_error =
        std::max(out.max_error, std::abs(kp.lambda_max - std::exp(2.0 * teich_distance(a, b))) /
                                    kp.lambda_max);
  }
  return out;
}

Outcome p_geodesic_ray(const VerifyConfig& cfg, Rng& rng) {
  Outcome out{0.0, cfg.trials};
  for (int k = 0; k < cfg.trials; ++k) {
    TeichPoint t0 = rand_teich(rng);
    MF alpha = rand_mf(rng);
    double t = rng.uniform(0.0, 10.0);
    TeichPoint pt = geodesic_ray(t0, alpha, t);
    out.max_error = std::max(out.max_error, std::abs(teich_distance(t0, pt) - t));
    double decay = extremal_length(pt, alpha) * std::exp(2.0 * t) / extremal_length(t0, alpha);
    out.max_error = std::max(out.max_error, std::abs(decay - 1.0));
  }
  return out;
}

// ---------------------------------------------------------------------------
// cone suite

Outcome p_hyperboloid_light_cone(const VerifyConfig& cfg, Rng& rng) {
  Outcome out{0.0, cfg.trials};
  for (int k = 0; k < cfg.trials; ++k) {
    double c = rng.uniform(0.25, 4.0);
    ConePoint in = ConePoint::interior(c, rand_teich(rng));
    if (pairing_i(in, in) != c * c) out.max_error = 1.0;
    ConePoint bd = ConePoint::boundary(rand_mf(rng));
    if (pairing_i(bd, bd) != 0.0) out.max_error = 1.0;
    if (pairing_i(lift_phi(rand_teich(rng)), ConePoint::zero()) != 0.0) out.max_error = 1.0;
  }
  return out;
}

Outcome p_pairing_exponentiates_distance(const VerifyConfig& cfg, Rng& rng) {
  Outcome out{0.0, cfg.trials};
  for (int k = 0; k < cfg.trials; ++k) {
    TeichPoint y = rand_teich(rng), z = rand_teich(rng);
    double v = pairing_i(lift_phi(y), lift_phi(z));
    out.max_error = std::max(out.max_error, std::abs(std::log(v) - teich_distance(y, z)));
    out.max_error = std::max(out.max_error, std::abs(pairing_i(lift_phi(y), lift_phi(y)) - 1.0));
  }
  return out;
}

Outcome p_extended_minsky(const VerifyConfig& cfg, Rng& rng) {
  Outcome out{0.0, cfg.trials};
  for (int k = 0; k < cfg.trials; ++k) {
    TeichPoint x = rand_teich(rng);
    ConePoint a = rand_cone_point(rng), b = rand_cone_point(rng);
    double v = pairing_i(a, b);
    double prod = ext_on_cone(x, a) * ext_on_cone(x, b);
    out.max_error = std::max(out.max_error, std::max(0.0, v * v - prod) / prod);

    // equality at the two ideal endpoints of a geodesic through x
    double r1 = rng.uniform(-5.0, 5.0);
    if (std::abs(r1 - x.x) < 1e-3) r1 += 1.0;
    double c = (x.x * x.x + x.y * x.y - r1 * r1) / (2.0 * (x.x - r1));
    double r2 = 2.0 * c - r1;
    ConePoint e1 = ConePoint::boundary(boundary_slope(r1));
    ConePoint e2 = ConePoint::boundary(boundary_slope(r2));
    double ve = pairing_i(e1, e2);
    double pe = ext_on_cone(x, e1) * ext_on_cone(x, e2);
    out.max_error = std::max(out.max_error, std::abs(ve * ve - pe) / pe);
  }
  return out;
}

Outcome p_radial_continuity(const VerifyConfig& cfg, Rng& rng) {
  Outcome out{0.0, std::min(cfg.trials, 64)};
  for (long long k = 0; k < out.trials; ++k) {
    ModelPoint target = model_interior(1.0, rand_teich(rng));
    bool to_infinity = rng.below(4) == 0;
    std::optional<double> r;
    if (!to_infinity) r = rng.uniform(-5.0, 5.0);
    MF cls = boundary_slope(r);
    TeichPoint z20 = geodesic_ray(cfg.x0, cls, 20.0);
    double along = pairing_i_based(cfg.x0, target, model_interior(1.0, z20));
    double limit = pairing_i_based(cfg.x0, target, model_boundary(1.0, cls));
    out.max_error = std::max(out.max_error, std::abs(along - limit));
  }
  return out;
}

Outcome p_boundary_gromov_identity(const VerifyConfig& cfg, Rng& rng) {
  Outcome out{0.0, cfg.trials};
  for (int k = 0; k < cfg.trials; ++k) {
    MFQ fq = rand_curve_class(rng), gq = rand_curve_class(rng);
    // scale/representative independence of I(F,G)^2 / (Ext(F) Ext(G)),
    // in exact arithmetic at the rational basepoint i
    Rational x(0), y(1);
    auto ratio_sq = [&](const MFQ& u, const MFQ& v) {
      Rational i = intersection(u, v);
      return i * i / (extremal_length(x, y, u) * extremal_length(x, y, v));
    };
    Rational q0 = ratio_sq(fq, gq);
    MFQ fs = scaled(Rational(rng.range(1, 9), rng.range(1, 5)), fq);
    MFQ gs = scaled(Rational(rng.range(1, 9), rng.range(1, 5)), gq);
    if (ratio_sq(fs, gs) != q0 || ratio_sq(gq, fq) != q0) out.max_error = 1.0;

    // the boundary Gromov product reproduces the same ratio through the
    // based pairing, identically in the stored class representatives
    ClosurePoint pf = ClosurePoint::boundary_class(to_double(fq));
    ClosurePoint pg = ClosurePoint::boundary_class(to_double(gq));
    double v = pairing_i_based(TeichPoint{0.0, 1.0}, ModelPoint{1.0, pf}, ModelPoint{1.0, pg});
    double w = intersection(pf.cls(), pg.cls()) /
               (std::sqrt(extremal_length(TeichPoint{0.0, 1.0}, pf.cls())) *
                std::sqrt(extremal_length(TeichPoint{0.0, 1.0}, pg.cls())));
    if (v != w) out.max_error = 1.0;
    double g = gm_gromov_product(TeichPoint{0.0, 1.0}, pf, pg);
    if (v == 0.0) {
      if (!std::isinf(g)) out.max_error = 1.0;
    } else if (g != -0.5 * std::log(v)) {
      out.max_error = 1.0;
    }
    if (!std::isinf(gm_gromov_product(TeichPoint{0.0, 1.0}, pf, pf))) out.max_error = 1.0;
  }
  return out;
}

Outcome p_nontriviality(const VerifyConfig& cfg, Rng& rng) {
  Outcome out{0.0, cfg.trials};
  for (int k = 0; k < cfg.trials; ++k) {
    TeichPoint y = rand_teich(rng);
    ConePoint a = rand_cone_point(rng);
    if (!(ext_on_cone(y, a) > 0.0)) out.max_error = 1.0;
    if (ext_on_cone(y, ConePoint::zero()) != 0.0) out.max_error = 1.0;
  }
  return out;
}

Outcome p_distortion(const VerifyConfig& cfg, Rng& rng) {
  Outcome out{0.0, cfg.trials};
  for (int k = 0; k < cfg.trials; ++k) {
    TeichPoint y1 = rand_teich(rng), y2 = rand_teich(rng);
    ConePoint a = rand_cone_point(rng);
    double ratio = ext_on_cone(y2, a) / ext_on_cone(y1, a);
    double bound = std::exp(2.0 * teich_distance(y1, y2));
    out.max_error = std::max(out.max_error, std::max(0.0, ratio - bound) / bound);
    out.max_error = std::max(out.max_error, std::max(0.0, 1.0 / bound - ratio) * bound);
  }
  return out;
}

Outcome p_unit_level_interior(const VerifyConfig& cfg, Rng& rng) {
  Outcome out{0.0, cfg.trials};
  for (int k = 0; k < cfg.trials; ++k) {
    double v = ext_based(cfg.x0, cfg.x0, model_interior(1.0, rand_teich(rng)));
    out.max_error = std::max(out.max_error, std::abs(v - 1.0));
  }
  return out;
}

Outcome p_unit_level_boundary(const VerifyConfig& cfg, Rng& rng) {
  Outcome out{0.0, cfg.trials};
  for (int k = 0; k < cfg.trials; ++k) {
    double v = ext_based(cfg.x0, cfg.x0, model_boundary(1.0, rand_mf(rng)));
    if (v != 1.0) out.max_error = std::max(out.max_error, std::abs(v - 1.0));
  }
  return out;
}

/// Shared sampler for neighborhood-based properties: draws zeta, delta and a
/// perturbed eta, returning accepted memberships only.
struct Membership {
  ModelPoint zeta = ModelPoint::vertex();
  ModelPoint eta = ModelPoint::vertex();
  double delta = 0.0;
};

std::vector<Membership> sample_memberships(const VerifyConfig& cfg, Rng& rng, int want) {
  std::vector<Membership> out;
  int attempts = 0;
  while (static_cast<int>(out.size()) < want && attempts < 40 * want) {
    ++attempts;
    double delta = rng.uniform(0.05, 0.6);
    bool interior = rng.below(2) == 0;
    ModelPoint zeta = ModelPoint::vertex();
    ModelPoint eta = ModelPoint::vertex();
    double t = rng.uniform(0.5, 2.0);
    double bump = delta * rng.uniform(0.02, 0.35);
    if (interior) {
      TeichPoint z = rand_teich(rng);
      zeta = model_interior(t, z);
      double zy = z.y * std::exp(rng.uniform(-bump, bump));
      TeichPoint zp{z.x + z.y * rng.uniform(-bump, bump), zy};
      eta = model_interior(t * (1.0 + rng.uniform(-bump, bump)), zp);
    } else {
      double theta = rng.uniform(0.0, 3.14159265358979323846);
      zeta = model_boundary(t, slope_direction(theta));
      eta = model_boundary(t * (1.0 + rng.uniform(-bump, bump)),
                           slope_direction(theta + rng.uniform(-bump, bump)));
    }
    NeighborhoodVerdict v = in_neighborhood(cfg.x0, zeta, eta, delta, cfg.samples);
    if (v.inside()) out.push_back(Membership{zeta, eta, delta});
  }
  return out;
}

Outcome p_neighborhood_sandwich(const VerifyConfig& cfg, Rng& rng) {
  auto members = sample_memberships(cfg, rng, 200);
  Outcome out{0.0, static_cast<long long>(members.size())};
  for (const auto& m : members) {
    double sz = std::sqrt(ext_based(cfg.x0, cfg.x0, m.zeta));
    double se = std::sqrt(ext_based(cfg.x0, cfg.x0, m.eta));
    double lo = (1.0 - m.delta) * sz, hi = (1.0 + m.delta) * sz;
    out.max_error = std::max(out.max_error, std::max(0.0, lo - se) / sz);
    out.max_error = std::max(out.max_error, std::max(0.0, se - hi) / sz);
  }
  return out;
}

Outcome p_equicontinuity(const VerifyConfig& cfg, Rng& rng) {
  auto members = sample_memberships(cfg, rng, 200);
  Outcome out{0.0, static_cast<long long>(members.size())};
  for (const auto& m : members) {
    TeichPoint y = rand_teich(rng);
    double ez = e_extended(cfg.x0, 1.0, y, m.zeta);
    double ee = e_extended(cfg.x0, 1.0, y, m.eta);
    double bound = std::max(1.0, std::sqrt(ext_based(cfg.x0, cfg.x0, m.zeta))) * m.delta;
    out.max_error = std::max(out.max_error, std::max(0.0, std::abs(ez - ee) - bound) / bound);
  }
  return out;
}

Outcome p_based_pairing_symmetry(const VerifyConfig& cfg, Rng& rng) {
  Outcome out{0.0, cfg.trials};
  for (int k = 0; k < cfg.trials; ++k) {
    ModelPoint m1 = rand_model_point(rng, true), m2 = rand_model_point(rng, true);
    if (pairing_i_based(cfg.x0, m1, m2) != pairing_i_based(cfg.x0, m2, m1)) out.max_error = 1.0;
  }
  return out;
}

Outcome p_dinf_truncation(const VerifyConfig& cfg, Rng& rng) {
  std::vector<int> ns{1, 2, 5, 10, 25};
  if (cfg.truncation > 25) ns.push_back(cfg.truncation);
  Outcome out{0.0, std::min(cfg.trials, 100)};
  for (long long k = 0; k < out.trials; ++k) {
    // convergence box: the best height-N slope near the extremal direction
    // limits the attainable gap, so the pairs stay near the basepoint
    TeichPoint y{rng.uniform(-0.25, 0.25), rng.uniform(0.8, 1.25)};
    TeichPoint z{rng.uniform(-0.25, 0.25), rng.uniform(0.8, 1.25)};
    double d = teich_distance(y, z);
    double prev = 0.0;
    double last = 0.0;
    for (std::size_t j = 0; j < ns.size(); ++j) {
      double v = d_infinity(phi_function(y, ns[j]), phi_function(z, ns[j]));
      if (j > 0) out.max_error = std::max(out.max_error, std::max(0.0, prev - v));
      out.max_error = std::max(out.max_error, std::max(0.0, v - d));
      prev = v;
      last = v;
    }
    out.max_error = std::max(out.max_error, d - last);
  }
  return out;
}

Outcome p_basepoint_independence(const VerifyConfig& cfg, Rng& rng) {
  Outcome out{0.0, cfg.trials};
  for (int k = 0; k < cfg.trials; ++k) {
    TeichPoint x1 = rand_teich(rng);
    ConePoint a = rand_cone_point(rng), b = rand_cone_point(rng);
    double intrinsic = pairing_i(a, b);
    double via0 = pairing_i_based(cfg.x0, lift_psi_inverse(cfg.x0, a), lift_psi_inverse(cfg.x0, b));
    double via1 = pairing_i_based(x1, lift_psi_inverse(x1, a), lift_psi_inverse(x1, b));
    out.max_error = std::max(out.max_error, rel(std::abs(via0 - intrinsic), intrinsic));
    out.max_error = std::max(out.max_error, rel(std::abs(via1 - intrinsic), intrinsic));
  }
  return out;
}

Outcome p_ext_sup_oracle(const VerifyConfig& cfg, Rng& rng) {
  Outcome out{0.0, std::min(cfg.trials, 100)};
  for (long long k = 0; k < out.trials; ++k) {
    TeichPoint y = rand_teich(rng);
    ConePoint a = rand_cone_point(rng);
    double closed = ext_on_cone(y, a);
    double sup = ext_sup_oracle(y, a, cfg.samples);
    out.max_error = std::max(out.max_error, std::abs(sup - closed) / closed);
  }
  return out;
}

// ---------------------------------------------------------------------------
// mcg suite

Outcome p_mcg_isometry(const VerifyConfig& cfg, Rng& rng) {
  Outcome out{0.0, cfg.trials};
  for (int k = 0; k < cfg.trials; ++k) {
    MappingClass h = random_mapping_class(rng);
    TeichPoint a = rand_teich(rng), b = rand_teich(rng);
    double d = teich_distance(a, b);
    out.max_error = std::max(out.max_error, rel(std::abs(teich_distance(act(h, a), act(h, b)) - d), d));
  }
  return out;
}

Outcome p_mcg_intersection_invariance(const VerifyConfig& cfg, Rng& rng) {
  Outcome out{0.0, cfg.trials};
  for (int k = 0; k < cfg.trials; ++k) {
    MappingClass h = random_mapping_class(rng);
    MFQ f = rand_mfq(rng), g = rand_mfq(rng);
    if (intersection(act(h, f), act(h, g)) != intersection(f, g)) out.max_error = 1.0;
  }
  return out;
}

Outcome p_mcg_pairing_equivariance(const VerifyConfig& cfg, Rng& rng) {
  Outcome out{0.0, cfg.trials};
  for (int k = 0; k < cfg.trials; ++k) {
    MappingClass h = random_mapping_class(rng);
    ConePoint a = rand_cone_point(rng, true), b = rand_cone_point(rng, true);
    double v = pairing_i(a, b);
    double w = pairing_i(act(h, a), act(h, b));
    out.max_error = std::max(out.max_error, rel(std::abs(v - w), v));
  }
  return out;
}

Outcome p_mcg_e_projective(const VerifyConfig& cfg, Rng& rng) {
  // E_{h[G]}(F) is proportional to E_{[G]}(h^{-1} F): cross-ratio identity,
  // exact on rational data.
  Outcome out{0.0, cfg.trials};
  for (int k = 0; k < cfg.trials; ++k) {
    MappingClass h = random_mapping_class(rng);
    MFQ g = rand_mfq(rng), f1 = rand_mfq(rng), f2 = rand_mfq(rng);
    MappingClass hi = h.inverse();
    Rational lhs = intersection(f1, act(h, g)) * intersection(act(hi, f2), g);
    Rational rhs = intersection(f2, act(h, g)) * intersection(act(hi, f1), g);
    if (lhs != rhs) out.max_error = 1.0;
  }
  return out;
}

Outcome p_mcg_boundary_action(const VerifyConfig& cfg, Rng& rng) {
  Outcome out{0.0, cfg.trials};
  for (int k = 0; k < cfg.trials; ++k) {
    MappingClass h = random_mapping_class(rng);
    long long p = rng.range(-12, 12), q = rng.range(0, 9);
    if (p == 0 && q == 0) p = 1;
    auto [ip, iq] = act_ideal_exact(h, p, q);
    MFQ lhs = boundary_slope_exact(ip, iq);
    MFQ rhs = primitive_class(act(h, boundary_slope_exact(p, q)));
    if (!(lhs == rhs)) out.max_error = 1.0;
  }
  return out;
}

Outcome p_mcg_null_equivariance(const VerifyConfig& cfg, Rng& rng) {
  Outcome out{0.0, cfg.trials};
  for (int k = 0; k < cfg.trials; ++k) {
    MappingClass h = random_mapping_class(rng);
    MFQ f = rand_mfq(rng);
    MFQ g = (k % 2 == 0) ? scaled(Rational(rng.range(1, 7), rng.range(1, 4)), f) : rand_mfq(rng);
    bool before = null_test(ConePoint::boundary(f), ConePoint::boundary(g));
    bool after = null_test(ConePoint::boundary(act(h, f)), ConePoint::boundary(act(h, g)));
    if (before != after) out.max_error = 1.0;
  }
  return out;
}

// ---------------------------------------------------------------------------
// walsh suite

WalshPointQ rand_walsh(Rng& rng, long long max_n = 30) {
  if (rng.below(2) == 0)
    return WalshPointQ::line(Rational(rng.range(-40, 40), rng.range(1, 8)));
  long long n = rng.range(1, max_n);
  Rational arc(rng.range(0, 32 * n), 8);  // in [0, 4n]
  return WalshPointQ::frame(n, arc);
}

Outcome p_walsh_metric(const VerifyConfig& cfg, Rng& rng) {
  Outcome out{0.0, cfg.trials};
  for (int k = 0; k < cfg.trials; ++k) {
    WalshPointQ p = rand_walsh(rng), q = rand_walsh(rng), r = rand_walsh(rng);
    if (walsh_distance(p, q) != walsh_distance(q, p)) out.max_error = 1.0;
    if (walsh_distance(p, p) != Rational(0)) out.max_error = 1.0;
    if (walsh_distance(p, r) > walsh_distance(p, q) + walsh_distance(q, r)) out.max_error = 1.0;
    if (!(p == q) && !(walsh_distance(p, q) > Rational(0))) out.max_error = 1.0;
  }
  return out;
}

Outcome p_walsh_oracle(const VerifyConfig&, Rng& rng) {
  Outcome out{0.0, 1000};
  for (int k = 0; k < 1000; ++k) {
    WalshPointQ p = rand_walsh(rng), q = rand_walsh(rng);
    if (walsh_distance(p, q) != oracle::walsh_dijkstra(p, q)) out.max_error = 1.0;
  }
  return out;
}

Outcome p_walsh_gromov_displays(const VerifyConfig&, Rng& rng) {
  Outcome out{0.0, 30};
  for (long long n = 1; n <= 30; ++n) {
    if (walsh_gromov(walsh_x1(n), walsh_x2(n)) != Rational(0)) out.max_error = 1.0;
    if (walsh_gromov(walsh_y1(n), walsh_y2(n)) != Rational(n)) out.max_error = 1.0;
    WalshPointQ any = rand_walsh(rng);
    if (walsh_gromov(walsh_basepoint(), any) != Rational(0)) out.max_error = 1.0;
  }
  return out;
}

std::vector<WalshPointQ> busemann_sample() {
  std::vector<WalshPointQ> pts;
  for (int i = 0; i < 40; ++i)
    pts.push_back(WalshPointQ::line(Rational(-20 + i, 2)));  // line coords in [-10, 9.5]
  for (long long m = 1; m <= 5; ++m) {
    pts.push_back(WalshPointQ::frame(m, Rational(m, 2)));
    pts.push_back(WalshPointQ::frame(m, Rational(2 * m)));
  }
  return pts;  // 50 points, support: frames <= 5, |line| <= 10
}

Outcome p_walsh_busemann(const VerifyConfig&, Rng&) {
  auto pts = busemann_sample();
  Outcome out{0.0, static_cast<long long>(pts.size())};
  for (long long n : {11LL, 15LL, 22LL, 30LL}) {
    for (const auto& p : pts) {
      Rational diff = abs(horofunction(walsh_x1(n), p) - horofunction(walsh_y1(n), p));
      if (diff != Rational(0))
        out.max_error = std::max(out.max_error, std::abs(diff.to_double()));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

const std::map<std::string, std::vector<Property>>& registry() {
  static const std::map<std::string, std::vector<Property>> reg = [] {
    std::map<std::string, std::vector<Property>> r;
    r["foliation"] = {
        {"foliation/intersection-symmetry", "I(F,G) = I(G,F) on rational pairs", true, 0.0,
         p_intersection_symmetry},
        {"foliation/intersection-bilinear", "I(sF,tG) = s t I(F,G) for s,t >= 0", true, 0.0,
         p_intersection_bilinear},
        {"foliation/null-dichotomy", "I(F,G) = 0 iff F and G are proportional or one is zero",
         true, 0.0, p_null_dichotomy},
        {"foliation/normalize-projective",
         "projective normalization is idempotent and scale invariant", false, 0.0,
         p_normalize_projective},
    };
    r["teich"] = {
        {"teich/minsky-inequality", "I(F,G)^2 <= Ext_t(F) Ext_t(G)", false, 0.0,
         p_minsky_inequality},
        {"teich/minsky-sharpness",
         "equality of the Minsky bound on orthogonal eigenpairs of the extremal form", false,
         1e-10, p_minsky_sharpness},
        {"teich/metric-axioms", "distance symmetry, identity and triangle inequality", false, 0.0,
         p_metric_axioms},
        {"teich/kerckhoff-grid",
         "pencil-eigenvalue distance matches the slope-circle supremum", false, 1e-9,
         p_kerckhoff_grid},
        {"teich/kerckhoff-sharp-pair",
         "the extremal pair realizes both ratios exp(+-2 d)", false, 1e-10,
         p_kerckhoff_sharp_pair},
        {"teich/geodesic-ray",
         "rays are unit speed and decay vertical extremal length at rate exp(-2t)", false, 0.0,
         p_geodesic_ray},
    };
    r["cone"] = {
        {"cone/hyperboloid-light-cone",
         "self-pairing is the squared scale inside and zero on the boundary", true, 0.0,
         p_hyperboloid_light_cone},
        {"cone/pairing-exponentiates-distance",
         "log i(phi(y), phi(z)) equals the distance; unit self-pairing on the slice", false, 0.0,
         p_pairing_exponentiates_distance},
        {"cone/extended-minsky",
         "i(a,b)^2 <= Ext_x(a) Ext_x(b), with equality at geodesic endpoints", false, 1e-10,
         p_extended_minsky},
        {"cone/radial-continuity",
         "the pairing along a ray converges to its value at the ideal class", false, 1e-6,
         p_radial_continuity},
        {"cone/boundary-gromov-identity",
         "exp(-2<[F]|[G]>) = I(F,G)/(Ext(F)Ext(G))^{1/2}, exactly on rational classes", true, 0.0,
         p_boundary_gromov_identity},
        {"cone/nontriviality", "extremal length vanishes only at the cone vertex", true, 0.0,
         p_nontriviality},
        {"cone/distortion",
         "exp(-2d) <= Ext_{y2}/Ext_{y1} <= exp(2d) on every cone point", false, 0.0,
         p_distortion},
        {"cone/unit-level-interior", "interior slice points have unit based extremal length",
         false, 0.0, p_unit_level_interior},
        {"cone/unit-level-boundary",
         "boundary slice points have exactly unit based extremal length", true, 0.0,
         p_unit_level_boundary},
        {"cone/neighborhood-sandwich",
         "members of U_delta(zeta) have extremal length within (1 +- delta)^2", false, 0.0,
         p_neighborhood_sandwich},
        {"cone/equicontinuity",
         "|E_y(zeta) - E_y(eta)| <= max(1, Ext(zeta)^{1/2}) delta on U_delta(zeta)", false, 0.0,
         p_equicontinuity},
        {"cone/based-pairing-symmetry", "the based pairing is symmetric, exactly", true, 0.0,
         p_based_pairing_symmetry},
        {"cone/dinf-truncation",
         "truncated sup distance is monotone in N and converges to the distance", false, 1e-6,
         p_dinf_truncation},
        {"cone/basepoint-independence",
         "based pairings of fixed cone points agree across basepoints", false, 0.0,
         p_basepoint_independence},
        {"cone/ext-sup-oracle",
         "the slope-circle supremum reproduces intrinsic extremal length", false, 1e-8,
         p_ext_sup_oracle},
    };
    r["mcg"] = {
        {"mcg/isometry", "mapping classes act isometrically", false, 0.0, p_mcg_isometry},
        {"mcg/intersection-invariance", "I(hF, hG) = I(F,G), exactly on rational data", true, 0.0,
         p_mcg_intersection_invariance},
        {"mcg/pairing-equivariance", "i(ha, hb) = i(a, b) on the cone", false, 0.0,
         p_mcg_pairing_equivariance},
        {"mcg/e-projective-equivariance",
         "E_{h[G]} is proportional to E_{[G]} composed with h^{-1}, exactly", true, 0.0,
         p_mcg_e_projective},
        {"mcg/boundary-action",
         "the ideal-point action commutes with the action on boundary classes", true, 0.0,
         p_mcg_boundary_action},
        {"mcg/null-space-equivariance", "null pairing is preserved, exactly on rational data",
         true, 0.0, p_mcg_null_equivariance},
    };
    r["walsh"] = {
        {"walsh/metric-axioms", "the glued-space distance is an exact metric", true, 0.0,
         p_walsh_metric},
        {"walsh/distance-oracle", "closed-form distance equals shortest paths on the anchor graph",
         true, 0.0, p_walsh_oracle},
        {"walsh/gromov-displays",
         "<x1|x2> = 0 and <y1|y2> = n at the basepoint, for n = 1..30", true, 0.0,
         p_walsh_gromov_displays},
        {"walsh/busemann-sample",
         "the corner and top sequences give identical horofunctions on the sample", true, 0.0,
         p_walsh_busemann},
    };
    return r;
  }();
  return reg;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"foliation", "teich", "cone", "mcg", "walsh", "all"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<PropertyResult> run_suite(const std::string& name, const VerifyConfig& cfg) {
  if (!is_suite(name)) throw std::invalid_argument("unknown suite: " + name);
  std::vector<PropertyResult> results;
  Rng base(cfg.seed);
  for (const auto& sname : {"foliation", "teich", "cone", "mcg", "walsh"}) {
    if (name != "all" && name != sname) continue;
    for (const auto& prop : registry().at(sname)) {
      Rng rng = base.fork(Rng::tag(prop.id.c_str()));
      Outcome o = prop.run(cfg, rng);
      PropertyResult r;
      r.id = prop.id;
      r.statement = prop.statement;
      r.exact = prop.exact;
      r.trials = o.trials;
      r.max_error = o.max_error;
      r.threshold = prop.exact ? 0.0 : std::max(cfg.tolerance, prop.floor);
      r.pass = prop.exact ? (o.max_error == 0.0) : (o.max_error <= r.threshold);
      results.push_back(std::move(r));
    }
  }
  return results;
}

}  // namespace elg::verify
