#pragma once

#include <string>
#include <vector>

#include "elg/cone.hpp"
#include "elgverify/verify.hpp"

namespace elg::verify {

/// Options for the convergence tables; defaults reproduce the documented
/// reference runs.
struct ConvergeOptions {
  TeichPoint from{0.0, 1.0};     // dinf: first point, radial: observation point
  TeichPoint to{0.0, 2.0};       // dinf: second point
  bool slope_infinity = true;    // radial: ray target
  double slope = 0.0;
  long long fp = 1, fq = 0;      // gromov-boundary: first class
  long long gp = 0, gq = 1;      // gromov-boundary: second class
};

/// Full pairwise table of the cone pairing in long form, one row per ordered
/// pair, with the distance and Gromov product filled on interior pairs.
std::string pair_csv(const VerifyConfig& cfg, const std::vector<ConePoint>& pts);

/// mode in {dinf, radial, gromov-boundary}.
std::string converge_csv(const VerifyConfig& cfg, const std::string& mode,
                         const ConvergeOptions& opt);

}  // namespace elg::verify
