#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "spin3/emboost.hpp"
#include "spin3/entanglement.hpp"
#include "spin3/evolution.hpp"

namespace spin3 {

enum class GridKind { time, theta };

struct Grid {
  GridKind kind = GridKind::theta;
  double start = 0.0;
  double stop = kPi;
  std::size_t samples = 512;

  // Evenly spaced values, start and stop included (one value when samples == 1).
  std::vector<double> values() const;
  friend bool operator==(const Grid&, const Grid&) = default;
};

struct OutputOptions {
  bool closed_form = true;  // emit closed-form columns when they apply
  bool tangles = true;
  friend bool operator==(const OutputOptions&, const OutputOptions&) = default;
};

struct Scenario {
  EMField field;
  std::array<ParticleKinematics, 3> particles;
  InitialStateSpec state = GhzSpec{};
  Grid grid;
  OutputOptions output;

  FieldConfig magnetic() const { return {field.b_magnitude, field.b_direction}; }
  void validate() const;
};

bool operator==(const ParticleKinematics& a, const ParticleKinematics& b);
bool operator==(const EMField& a, const EMField& b);
bool operator==(const Scenario& a, const Scenario& b);

// Defaults: B along x, three unit-charge, unit-mass particles at v = 0.5
// in the yz-plane at 120 degrees (a decay at rest), anomaly 0.00115965.
std::array<ParticleKinematics, 3> default_particles();

// E = 0, B along +-x, every velocity orthogonal to B, identical mass,
// charge, anomaly and speed: all three unitaries coincide and depend on
// theta = (omega + Omega) t / 2 alone.
bool is_special_configuration(const Scenario& s, double tolerance = 1e-12);

// Combined rate omega + Omega of the special configuration.
double special_rate(const Scenario& s);

struct Sample {
  double t = 0.0;
  double theta = 0.0;  // NaN when undefined
  Amplitudes amplitudes{};
  Probabilities probabilities{};
  std::optional<Probabilities> closed_form;
  std::optional<TangleReport> tangles;
};

// Evolves the scenario's initial state over its grid. Samples are computed
// in parallel and returned in grid order. Errors carry the sample index.
std::vector<Sample> time_series(const Scenario& scenario, std::size_t threads = 0);

// State at time t (physical time grid semantics), lab frame.
ThreeQubitState state_at(const Scenario& scenario, const ThreeQubitState& initial, double t);

}  // namespace spin3
