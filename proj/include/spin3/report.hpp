#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "spin3/simulation.hpp"

namespace spin3 {

struct RunSummary {
  std::size_t samples = 0;
  bool special_configuration = false;
  double max_norm_error = 0.0;                   // |sum P - 1|
  std::optional<double> max_closed_form_error;   // max |P - P*|
  std::optional<double> max_tangle_drift;        // max |tau(t) - tau(t0)| over all tangles
};

// Column names in output order.
std::vector<std::string> csv_header(const Scenario& scenario, bool with_closed_form);

// Writes the header and one row per sample, reals with 17 significant digits.
void write_csv(std::ostream& out, const Scenario& scenario, const std::vector<Sample>& samples);

RunSummary summarize(const Scenario& scenario, const std::vector<Sample>& samples);

void write_summary(std::ostream& out, const RunSummary& summary);

// time_series + write_csv + summarize.
RunSummary run(const Scenario& scenario, std::ostream& csv);

}  // namespace spin3
