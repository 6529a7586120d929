#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace spin3 {

// Sections: precession, probabilities (closed forms), tangles, frames
// (orthogonal E and B fields), angmom (coupled-state catalog).
struct VerifyOptions {
  std::optional<std::string> section;
  // Dev-only negative control: shifts the numeric evolution angle by 1e-6 so
  // the closed-form comparisons must fail.
  bool mutate = false;
};

struct CheckResult {
  std::string section;
  std::string name;
  double error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const;
};

// Throws std::invalid_argument for an unknown section name.
VerifyReport verify(const VerifyOptions& options = {});

void write_report(std::ostream& out, const VerifyReport& report);

}  // namespace spin3
