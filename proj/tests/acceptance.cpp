// Acceptance suite: every contract of the library is exercised end to end at
// its stated tolerance, one pass/fail line per criterion.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "elg/cone.hpp"
#include "elg/function_vector.hpp"
#include "elg/mapping_class.hpp"
#include "elg/rng.hpp"
#include "elg/walsh.hpp"
#include "elgverify/oracles.hpp"

using namespace elg;

namespace {

const TeichPoint kX0{0.0, 1.0};

TeichPoint rand_teich(Rng& rng) {
  return TeichPoint{rng.uniform(-3.0, 3.0), rng.uniform(0.25, 4.0)};
}
MF rand_mf(Rng& rng) {
  for (;;) {
    MF f{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
    if (std::hypot(f.a, f.b) > 1e-2) return f;
  }
}
MFQ rand_class(Rng& rng) {
  for (;;) {
    long long p = rng.range(-20, 20), q = rng.range(-20, 20);
    if (p == 0 && q == 0) continue;
    return primitive_class(MFQ{Rational(p), Rational(q)});
  }
}
ConePoint rand_cone_point(Rng& rng) {
  if (rng.below(2) == 0) return ConePoint::interior(rng.uniform(0.25, 4.0), rand_teich(rng));
  return ConePoint::boundary(scaled(rng.uniform(0.25, 4.0), normalize_projective(rand_mf(rng))));
}

struct Check {
  std::string name;
  std::function<bool(std::string&)> run;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// --- 1 -----------------------------------------------------------------
bool kerckhoff_formula(std::string& detail) {
  Rng rng(1001);
  double worst_grid = 0.0, worst_closed = 0.0;
  for (int k = 0; k < 500; ++k) {
    TeichPoint a = rand_teich(rng), b = rand_teich(rng);
    double d = teich_distance(a, b);
    worst_grid = std::max(worst_grid, std::abs(d - oracle::grid_sup_distance(a, b, 4096)));
    double u = ((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y)) / (2.0 * a.y * b.y);
    worst_closed = std::max(worst_closed, std::abs(d - 0.5 * std::acosh(1.0 + u)));
  }
  detail = "grid err " + fmt(worst_grid) + ", closed-form err " +
           fmt(worst_closed);
  return worst_grid <= 1e-9 && worst_closed <= 1e-12;
}

// --- 2 -----------------------------------------------------------------
bool sharp_pair(std::string& detail) {
  Rng rng(1002);
  double worst = 0.0;
  for (int k = 0; k < 500; ++k) {
    TeichPoint a = rand_teich(rng), b = rand_teich(rng);
    KerckhoffPair kp = kerckhoff_sup(a, b, kX0);
    if (kp.isotropic) continue;
    double rf = extremal_length(a, kp.maximizer) / extremal_length(b, kp.maximizer);
    double rg = extremal_length(b, kp.minimizer) / extremal_length(a, kp.minimizer);
    worst = std::max(worst, std::abs(rf - kp.lambda_max) / kp.lambda_max);
    worst = std::max(worst, std::abs(rg - kp.lambda_max) / kp.lambda_max);
  }
  detail = "max relative ratio error " + fmt(worst);
  return worst <= 1e-10;
}

// --- 3 -----------------------------------------------------------------
bool minsky(std::string& detail) {
  Rng rng(1003);
  double worst_violation = 0.0, worst_sharp = 0.0;
  for (int k = 0; k < 10000; ++k) {
    TeichPoint t = rand_teich(rng);
    MF f = rand_mf(rng), g = rand_mf(rng);
    double i = intersection(f, g);
    double prod = extremal_length(t, f) * extremal_length(t, g);
    worst_violation = std::max(worst_violation, (i * i - prod) / prod);

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(extremal_form(t));
    MF ef{es.eigenvectors()(0, 0), es.eigenvectors()(1, 0)};
    MF eg{es.eigenvectors()(0, 1), es.eigenvectors()(1, 1)};
    double is = intersection(ef, eg);
    double ps = extremal_length(t, ef) * extremal_length(t, eg);
    worst_sharp = std::max(worst_sharp, std::abs(is * is - ps) / ps);
  }
  detail = "max violation " + fmt(worst_violation) + ", eigenpair gap " +
           fmt(worst_sharp);
  return worst_violation <= 1e-12 && worst_sharp <= 1e-10;
}

// --- 4 -----------------------------------------------------------------
bool pairing_instances(std::string& detail) {
  Rng rng(1004);
  // (i) function values of the unscaled lift, bit-identical to the closed form
  for (int k = 0; k < 100; ++k) {
    TeichPoint y = rand_teich(rng);
    for (const CurveClass& c : curve_family(2)) {
      if (pairing_i(lift_phi(y), ConePoint::boundary(c.foliation())) !=
          std::sqrt(extremal_length(y, c.foliation()))) {
        detail = "lift value mismatch";
        return false;
      }
    }
  }
  // (iv) the pairing exponentiates the distance; unit self-pairing exactly
  double worst = 0.0;
  for (int k = 0; k < 500; ++k) {
    TeichPoint y = rand_teich(rng), z = rand_teich(rng);
    worst = std::max(worst,
                     std::abs(std::log(pairing_i(lift_phi(y), lift_phi(z))) - teich_distance(y, z)));
    if (pairing_i(lift_phi(y), lift_phi(y)) != 1.0) {
      detail = "self-pairing not exactly 1";
      return false;
    }
  }
  if (worst > 1e-12) {
    detail = "log-pairing error " + fmt(worst);
    return false;
  }
  // (v) on integer boundary classes the pairing is the crossing determinant
  for (int k = 0; k < 500; ++k) {
    long long p1 = rng.range(-15, 15), q1 = rng.range(-15, 15);
    long long p2 = rng.range(-15, 15), q2 = rng.range(-15, 15);
    if ((p1 == 0 && q1 == 0) || (p2 == 0 && q2 == 0)) continue;
    double v = pairing_i(ConePoint::boundary(MF{double(p1), double(q1)}),
                         ConePoint::boundary(MF{double(p2), double(q2)}));
    if (v != double(std::abs(p1 * q2 - q1 * p2))) {
      detail = "boundary pairing not exactly |ad-bc|";
      return false;
    }
  }
  detail = "log-pairing error " + fmt(worst) + ", instances exact";
  return true;
}

// --- 5 -----------------------------------------------------------------
bool light_cone(std::string& detail) {
  Rng rng(1005);
  for (int k = 0; k < 500; ++k) {
    double c = rng.uniform(0.25, 4.0);
    ConePoint in = ConePoint::interior(c, rand_teich(rng));
    if (pairing_i(in, in) != c * c) {
      detail = "interior self-pairing not exactly c^2";
      return false;
    }
    ConePoint bd = ConePoint::boundary(rand_mf(rng));
    if (pairing_i(bd, bd) != 0.0) {
      detail = "boundary self-pairing not exactly 0";
      return false;
    }
  }
  detail = "hyperboloid and light-cone identities exact";
  return true;
}

// --- 6 -----------------------------------------------------------------
bool gromov_extension(std::string& detail) {
  Rng rng(1006);
  double worst = 0.0;
  for (int k = 0; k < 500; ++k) {
    TeichPoint x0 = rand_teich(rng), y = rand_teich(rng), z = rand_teich(rng);
    double lhs = gm_gromov_product(x0, ClosurePoint::interior(y), ClosurePoint::interior(z));
    worst = std::max(worst, std::abs(lhs - 0.5 * (teich_distance(x0, y) + teich_distance(x0, z) -
                                                  teich_distance(y, z))));
  }
  if (worst > 1e-12) {
    detail = "interior Gromov error " + fmt(worst);
    return false;
  }
  // boundary identity on rational slope classes
  for (int k = 0; k < 200; ++k) {
    MFQ fq = rand_class(rng), gq = rand_class(rng);
    ClosurePoint pf = ClosurePoint::boundary_class(to_double(fq));
    ClosurePoint pg = ClosurePoint::boundary_class(to_double(gq));
    double v = pairing_i_based(kX0, ModelPoint{1.0, pf}, ModelPoint{1.0, pg});
    double w = intersection(pf.cls(), pg.cls()) /
               (std::sqrt(extremal_length(kX0, pf.cls())) *
                std::sqrt(extremal_length(kX0, pg.cls())));
    double g = gm_gromov_product(kX0, pf, pg);
    bool ok = (v == w) && (v == 0.0 ? std::isinf(g) : g == -0.5 * std::log(v));
    // exact rational scale invariance of the squared identity
    Rational zx(0), zy(1);
    auto ratio_sq = [&](const MFQ& u, const MFQ& vv) {
      Rational i = intersection(u, vv);
      return i * i / (extremal_length(zx, zy, u) * extremal_length(zx, zy, vv));
    };
    ok = ok && ratio_sq(scaled(Rational(3, 2), fq), scaled(Rational(7, 5), gq)) ==
                   ratio_sq(fq, gq);
    if (!ok) {
      detail = "boundary identity failed";
      return false;
    }
  }
  // radial limits at t = 20
  double worst_radial = 0.0;
  for (int k = 0; k < 50; ++k) {
    ModelPoint target = model_interior(1.0, rand_teich(rng));
    std::optional<double> r;
    if (rng.below(4) != 0) r = rng.uniform(-5.0, 5.0);
    MF cls = boundary_slope(r);
    double limit = pairing_i_based(kX0, target, model_boundary(1.0, cls));
    double along =
        pairing_i_based(kX0, target, model_interior(1.0, geodesic_ray(kX0, cls, 20.0)));
    worst_radial = std::max(worst_radial, std::abs(along - limit));
  }
  detail = "interior err " + fmt(worst) + ", radial err at t=20 " +
           fmt(worst_radial);
  return worst_radial < 1e-6;
}

// --- 7 -----------------------------------------------------------------
bool intrinsic_extremal_length(std::string& detail) {
  Rng rng(1007);
  double worst = 0.0;
  for (int k = 0; k < 500; ++k) {
    TeichPoint x0 = rand_teich(rng), y = rand_teich(rng), z = rand_teich(rng);
    double t = rng.uniform(0.25, 4.0);
    double via_cone = ext_on_cone(y, lift_psi(x0, model_interior(t, z)));
    double closed = t * t * std::exp(2.0 * (teich_distance(y, z) - teich_distance(x0, z)));
    worst = std::max(worst, std::abs(via_cone - closed) / closed);
  }
  if (worst > 1e-12) {
    detail = "interior closed form err " + fmt(worst);
    return false;
  }
  double worst_sup = 0.0;
  for (int k = 0; k < 100; ++k) {
    TeichPoint y = rand_teich(rng);
    ConePoint a = rand_cone_point(rng);
    double closed = ext_on_cone(y, a);
    worst_sup = std::max(worst_sup, std::abs(ext_sup_oracle(y, a, 4096) - closed) / closed);
  }
  detail = "closed err " + fmt(worst) + ", sup-oracle err " + fmt(worst_sup);
  return worst_sup <= 1e-8;
}

// --- 8 -----------------------------------------------------------------
struct Membership {
  ModelPoint zeta = ModelPoint::vertex();
  ModelPoint eta = ModelPoint::vertex();
  double delta = 0.0;
};

std::vector<Membership> sample_memberships(Rng& rng, int want) {
  std::vector<Membership> out;
  int attempts = 0;
  while (static_cast<int>(out.size()) < want && attempts < 40 * want) {
    ++attempts;
    double delta = rng.uniform(0.05, 0.6);
    double t = rng.uniform(0.5, 2.0);
    double bump = delta * rng.uniform(0.02, 0.35);
    ModelPoint zeta = ModelPoint::vertex(), eta = ModelPoint::vertex();
    if (rng.below(2) == 0) {
      TeichPoint z = rand_teich(rng);
      zeta = model_interior(t, z);
      eta = model_interior(t * (1.0 + rng.uniform(-bump, bump)),
                           TeichPoint{z.x + z.y * rng.uniform(-bump, bump),
                                      z.y * std::exp(rng.uniform(-bump, bump))});
    } else {
      double theta = rng.uniform(0.0, 3.14159265358979323846);
      zeta = model_boundary(t, slope_direction(theta));
      eta = model_boundary(t * (1.0 + rng.uniform(-bump, bump)),
                           slope_direction(theta + rng.uniform(-bump, bump)));
    }
    if (in_neighborhood(kX0, zeta, eta, delta, 4096).inside())
      out.push_back(Membership{zeta, eta, delta});
  }
  return out;
}

bool level_set_and_sandwich(std::string& detail) {
  Rng rng(1008);
  double worst = 0.0;
  for (int k = 0; k < 500; ++k) {
    bool interior = rng.below(2) == 0;
    ModelPoint m = interior ? model_interior(1.0, rand_teich(rng))
                            : model_boundary(1.0, rand_mf(rng));
    double v = ext_based(kX0, kX0, m);
    if (!interior && v != 1.0) {
      detail = "boundary slice level not exactly 1";
      return false;
    }
    worst = std::max(worst, std::abs(v - 1.0));
  }
  if (worst > 1e-12) {
    detail = "interior slice level err " + fmt(worst);
    return false;
  }
  auto members = sample_memberships(rng, 200);
  double worst_sandwich = 0.0;
  for (const auto& m : members) {
    double sz = std::sqrt(ext_based(kX0, kX0, m.zeta));
    double se = std::sqrt(ext_based(kX0, kX0, m.eta));
    worst_sandwich = std::max(worst_sandwich, ((1.0 - m.delta) * sz - se) / sz);
    worst_sandwich = std::max(worst_sandwich, (se - (1.0 + m.delta) * sz) / sz);
  }
  detail = "level err " + fmt(worst) + ", sandwich margin violation " +
           fmt(worst_sandwich) + " on " + std::to_string(members.size()) + " members";
  return members.size() >= 100 && worst_sandwich <= 0.0;
}

// --- 9 -----------------------------------------------------------------
bool equicontinuity(std::string& detail) {
  Rng rng(1009);
  auto members = sample_memberships(rng, 200);
  double worst = 0.0;
  for (const auto& m : members) {
    TeichPoint y = rand_teich(rng);
    double ez = e_extended(kX0, 1.0, y, m.zeta);
    double ee = e_extended(kX0, 1.0, y, m.eta);
    double bound = std::max(1.0, std::sqrt(ext_based(kX0, kX0, m.zeta))) * m.delta;
    worst = std::max(worst, (std::abs(ez - ee) - bound) / bound);
  }
  detail = "bound violation " + fmt(worst) + " on " +
           std::to_string(members.size()) + " members";
  return members.size() >= 100 && worst <= 1e-10;
}

// --- 10 ----------------------------------------------------------------
bool mapping_class_suite(std::string& detail) {
  Rng rng(1010);
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    MappingClass h = random_mapping_class(rng, 8);
    TeichPoint a = rand_teich(rng), b = rand_teich(rng);
    double d = teich_distance(a, b);
    worst = std::max(worst,
                     std::abs(teich_distance(act(h, a), act(h, b)) - d) / std::max(1.0, d));

    MFQ f = rand_class(rng), g = rand_class(rng), f2 = rand_class(rng);
    if (intersection(act(h, f), act(h, g)) != intersection(f, g)) {
      detail = "intersection invariance failed";
      return false;
    }
    ConePoint ca = rand_cone_point(rng), cb = rand_cone_point(rng);
    double v = pairing_i(ca, cb), w = pairing_i(act(h, ca), act(h, cb));
    worst = std::max(worst, std::abs(v - w) / std::max(1.0, v));

    MappingClass hi = h.inverse();
    if (intersection(f2, act(h, g)) * intersection(act(hi, f), g) !=
        intersection(f, act(h, g)) * intersection(act(hi, f2), g)) {
      detail = "projective identity failed";
      return false;
    }
    long long p = rng.range(-12, 12), q = rng.range(0, 9);
    if (p == 0 && q == 0) p = 1;
    auto [ip, iq] = act_ideal_exact(h, p, q);
    if (!(boundary_slope_exact(ip, iq) == primitive_class(act(h, boundary_slope_exact(p, q))))) {
      detail = "boundary commutation failed";
      return false;
    }
    MFQ gp = (k % 2 == 0) ? scaled(Rational(rng.range(1, 7), rng.range(1, 4)), f)
                          : rand_class(rng);
    if (null_test(ConePoint::boundary(f), ConePoint::boundary(gp)) !=
        null_test(ConePoint::boundary(act(h, f)), ConePoint::boundary(act(h, gp)))) {
      detail = "null-space equivariance failed";
      return false;
    }
  }
  detail = "exact identities hold, float error " + fmt(worst);
  return worst <= 1e-12;
}

// --- 11 ----------------------------------------------------------------
bool walsh_space(std::string& detail) {
  for (long long n = 1; n <= 30; ++n) {
    if (walsh_gromov(walsh_x1(n), walsh_x2(n)) != Rational(0) ||
        walsh_gromov(walsh_y1(n), walsh_y2(n)) != Rational(n)) {
      detail = "Gromov product displays failed at n=" + std::to_string(n);
      return false;
    }
  }
  Rng rng(1011);
  auto rand_point = [&rng]() {
    if (rng.below(2) == 0) return WalshPointQ::line(Rational(rng.range(-40, 40), rng.range(1, 8)));
    long long n = rng.range(1, 30);
    return WalshPointQ::frame(n, Rational(rng.range(0, 32 * n), 8));
  };
  for (int k = 0; k < 1000; ++k) {
    WalshPointQ p = rand_point(), q = rand_point();
    if (walsh_distance(p, q) != oracle::walsh_dijkstra(p, q)) {
      detail = "distance oracle mismatch";
      return false;
    }
  }
  std::vector<WalshPointQ> sample;
  for (int i = 0; i < 40; ++i) sample.push_back(WalshPointQ::line(Rational(-20 + i, 2)));
  for (long long m = 1; m <= 5; ++m) {
    sample.push_back(WalshPointQ::frame(m, Rational(m, 2)));
    sample.push_back(WalshPointQ::frame(m, Rational(2 * m)));
  }
  for (long long n : {11LL, 18LL, 30LL}) {
    for (const auto& p : sample) {
      if (horofunction(walsh_x1(n), p) != horofunction(walsh_y1(n), p)) {
        detail = "horofunction discrepancy beyond sample support";
        return false;
      }
    }
  }
  detail = "all identities exact";
  return true;
}

// --- 12 ----------------------------------------------------------------
bool dinf_truncation(std::string& detail) {
  Rng rng(1012);
  double worst_gap = 0.0, worst_mono = 0.0;
  for (int k = 0; k < 100; ++k) {
    // convergence box |x| <= 1/4, y in [4/5, 5/4]
    TeichPoint y{rng.uniform(-0.25, 0.25), rng.uniform(0.8, 1.25)};
    TeichPoint z{rng.uniform(-0.25, 0.25), rng.uniform(0.8, 1.25)};
    double d = teich_distance(y, z);
    double prev = 0.0, last = 0.0;
    for (int n : {1, 2, 5, 10, 25, 50}) {
      double v = d_infinity(phi_function(y, n), phi_function(z, n));
      worst_mono = std::max(worst_mono, prev - v);
      prev = v;
      last = v;
    }
    worst_gap = std::max(worst_gap, d - last);
  }
  detail = "monotonicity violation " + fmt(worst_mono) + ", final gap " +
           fmt(worst_gap);
  return worst_mono <= 0.0 && worst_gap < 1e-6;
}

// --- 13 ----------------------------------------------------------------
bool determinism(std::string& detail) {
  auto run = [](const std::string& out) {
    std::string cmd = std::string(ELG_CLI_PATH) + " verify --suite all --seed 0 --out " + out +
                      " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  };
  auto slurp = [](const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  int rc1 = run("/tmp/acc_report_1.json"), rc2 = run("/tmp/acc_report_2.json");
  std::string a = slurp("/tmp/acc_report_1.json"), b = slurp("/tmp/acc_report_2.json");
  detail = "exit codes " + std::to_string(rc1) + "/" + std::to_string(rc2) + ", " +
           std::to_string(a.size()) + " bytes";
  return rc1 == 0 && rc2 == 0 && !a.empty() && a == b;
}

}  // namespace

int main() {
  std::vector<Check> checks = {
      {"Kerckhoff formula: pencil distance vs grid sup (1e-9) and closed form (1e-12)",
       kerckhoff_formula},
      {"sharp pair attains both extremal ratios (1e-10 relative)", sharp_pair},
      {"Minsky inequality on 10^4 triples (1e-12) with eigenpair equality (1e-10)", minsky},
      {"pairing instances: lift values, distance exponentiation, crossing numbers",
       pairing_instances},
      {"hyperboloid and light-cone self-pairings are exact", light_cone},
      {"Gromov product extension: interior, boundary, radial limits", gromov_extension},
      {"intrinsic extremal length closed form (1e-12) and sup oracle (1e-8)",
       intrinsic_extremal_length},
      {"unit level set of the slice and neighborhood sandwich", level_set_and_sandwich},
      {"equicontinuity bound on sampled neighborhoods", equicontinuity},
      {"mapping class suite: exact identities, isometry and equivariance (1e-12)",
       mapping_class_suite},
      {"walsh space: displays, distance oracle, horofunctions, all exact", walsh_space},
      {"sup-distance truncation: monotone, final gap below 1e-6 at N=50", dinf_truncation},
      {"verify --suite all is byte-deterministic and passes", determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = checks[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %2zu. %s%s%s\n", ok ? "PASS" : "FAIL", i + 1, checks[i].name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
  }
  if (failures) std::printf("%d of %zu criteria failed\n", failures, checks.size());
  return failures == 0 ? 0 : 1;
}
