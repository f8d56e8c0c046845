#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "elg/teichmuller.hpp"

namespace elg::verify {

/// Run parameters shared by every suite. The basepoint feeds all based
/// constructions; the seed pins every random draw.
struct VerifyConfig {
  TeichPoint x0{0.0, 1.0};
  int truncation = 50;
  double tolerance = 1e-9;
  int samples = 4096;
  int trials = 500;
  std::uint64_t seed = 0;
};

/// Outcome of one property check. Exact properties pass only with a zero
/// error; measured properties pass when the error stays within the applied
/// threshold, which is the configured tolerance relaxed to the property's
/// own attainable floor (coarser checks like sampled suprema and truncation
/// gaps cannot meaningfully go below it).
struct PropertyResult {
  std::string id;
  std::string statement;
  bool exact = false;
  long long trials = 0;
  double max_error = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs one suite (or "all") and returns its records in registry order.
std::vector<PropertyResult> run_suite(const std::string& name, const VerifyConfig& cfg);

inline bool all_pass(const std::vector<PropertyResult>& rs) {
  for (const auto& r : rs)
    if (!r.pass) return false;
  return true;
}

}  // namespace elg::verify
