#include "spin3/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace spin3 {

namespace {

std::string format_real(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

bool has_closed_form(const std::vector<Sample>& samples) {
  return !samples.empty() && samples.front().closed_form.has_value();
}

}  // namespace

std::vector<std::string> csv_header(const Scenario& scenario, bool with_closed_form) {
  std::vector<std::string> cols{"t", "theta"};
  for (int n = 0; n < 8; ++n) cols.push_back("P_" + BasisLabel::from_index(n).str());
  if (scenario.output.tangles) {
    for (const char* name : {"tau123", "tau12", "tau13", "tau23"}) cols.emplace_back(name);
  }
  if (with_closed_form) {
    for (int n = 0; n < 8; ++n) cols.push_back("P*_" + BasisLabel::from_index(n).str());
  }
  return cols;
}

void write_csv(std::ostream& out, const Scenario& scenario, const std::vector<Sample>& samples) {
  const auto header = csv_header(scenario, has_closed_form(samples));
  for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << header[c];
  out << "\n";
  for (const Sample& s : samples) {
    out << format_real(s.t) << "," << format_real(s.theta);
    for (double p : s.probabilities) out << "," << format_real(p);
    if (s.tangles) {
      out << "," << format_real(s.tangles->tau123) << "," << format_real(s.tangles->tau12) << ","
          << format_real(s.tangles->tau31) << "," << format_real(s.tangles->tau23);
    }
    if (s.closed_form) {
      for (double p : *s.closed_form) out << "," << format_real(p);
    }
    out << "\n";
  }
}

RunSummary summarize(const Scenario& scenario, const std::vector<Sample>& samples) {
  RunSummary out;
  out.samples = samples.size();
  out.special_configuration = is_special_configuration(scenario);
  if (samples.empty()) return out;

  for (const Sample& s : samples) {
    double total = 0.0;
    for (double p : s.probabilities) total += p;
    out.max_norm_error = std::max(out.max_norm_error, std::abs(total - 1.0));
    if (s.closed_form) {
      double worst = out.max_closed_form_error.value_or(0.0);
      for (std::size_t n = 0; n < 8; ++n) {
        worst = std::max(worst, std::abs(s.probabilities[n] - (*s.closed_form)[n]));
      }
      out.max_closed_form_error = worst;
    }
  }

  if (samples.front().tangles) {
    const TangleReport& t0 = *samples.front().tangles;
    double drift = 0.0;
    for (const Sample& s : samples) {
      const TangleReport& t = *s.tangles;
      drift = std::max({drift, std::abs(t.tau123 - t0.tau123), std::abs(t.tau12 - t0.tau12),
                        std::abs(t.tau23 - t0.tau23), std::abs(t.tau31 - t0.tau31)});
    }
    out.max_tangle_drift = drift;
  }
  return out;
}

void write_summary(std::ostream& out, const RunSummary& s) {
  out << "samples: " << s.samples << "\n";
  out << "special configuration: " << (s.special_configuration ? "yes" : "no") << "\n";
  out << "max |sum P - 1|: " << format_real(s.max_norm_error) << "\n";
  if (s.max_closed_form_error) {
    out << "max |numeric - closed form|: " << format_real(*s.max_closed_form_error) << "\n";
  }
  if (s.max_tangle_drift) out << "max tangle drift: " << format_real(*s.max_tangle_drift) << "\n";
}

RunSummary run(const Scenario& scenario, std::ostream& csv) {
  const std::vector<Sample> samples = time_series(scenario);
  write_csv(csv, scenario, samples);
  return summarize(scenario, samples);
}

}  // namespace spin3
