#pragma once

#include <stdexcept>
#include <string>

#include "spin3/simulation.hpp"

// Line-based scenario files:
//
//   # comment
//   field.B = 1.0
//   field.Bhat = 1 0 0
//   particle1.v = 0.6
//   state.kind = ghz
//   state.epsilon = +1
//   grid.theta = 0:pi:512
//
// Reals accept a plain number or a multiple of pi ("pi", "2pi/3",
// "-pi/4", "0.5*pi"). Vectors are three reals separated by spaces or
// commas. Units are natural (c = hbar = 1).

namespace spin3 {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

// Writes every key, reals with 17 significant digits.
std::string serialize(const Scenario& scenario);

// Parses a real with the pi shorthand above; throws DomainError.
double parse_real(const std::string& token);

}  // namespace spin3
