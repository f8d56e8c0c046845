#pragma once

#include <string>

#include "elg/teichmuller.hpp"
#include "elgverify/verify.hpp"

namespace elg::verify {

struct PlotOptions {
  TeichPoint from{0.0, 1.0};
  TeichPoint to{0.0, 2.0};
  int walsh_frames = 3;
};

/// Deterministic SVG 1.1 text. what in {geodesic, embedding, walsh}:
/// a half-plane geodesic with its ideal endpoint markers, the damped slice
/// against the unit-self-pairing sheet in a projected function space, or the
/// line-with-frames picture.
std::string plot_svg(const VerifyConfig& cfg, const std::string& what, const PlotOptions& opt);

}  // namespace elg::verify
