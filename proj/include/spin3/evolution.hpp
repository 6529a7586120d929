#pragma once

#include <array>
#include <optional>
#include <variant>

#include "spin3/precession.hpp"
#include "spin3/qstate.hpp"

namespace spin3 {

// Relative phase of the W-type initial states: 0 or +-2pi/3.
enum class WPhase { zero, plus, minus };

double phase_angle(WPhase phase);
// f = 1 + exp(-i phi) + exp(i phi): 3 for phi = 0, 0 for phi = +-2pi/3.
double phase_factor(WPhase phase);

struct GhzSpec {
  int epsilon = 1;  // +1 or -1
  friend bool operator==(const GhzSpec&, const GhzSpec&) = default;
};
struct WSpec {
  WPhase phase = WPhase::zero;
  friend bool operator==(const WSpec&, const WSpec&) = default;
};
struct WFlipSpec {
  WPhase phase = WPhase::zero;
  friend bool operator==(const WFlipSpec&, const WFlipSpec&) = default;
};
struct CustomSpec {
  Amplitudes amplitudes{};  // normalized on construction of the state
  friend bool operator==(const CustomSpec&, const CustomSpec&) = default;
};

using InitialStateSpec = std::variant<GhzSpec, WSpec, WFlipSpec, CustomSpec>;

// (|111> + eps |bbb>) / sqrt 2
ThreeQubitState ghz_state(int epsilon);
// (|11b> + e^{-i phi} |1b1> + e^{i phi} |b11>) / sqrt 3
ThreeQubitState w_state(WPhase phase);
// (|bb1> + e^{i phi} |b1b> + e^{-i phi} |1bb>) / sqrt 3
ThreeQubitState wflip_state(WPhase phase);

ThreeQubitState make_initial_state(const InitialStateSpec& spec);

// (M1 x M2 x M3) |state>.
ThreeQubitState evolve(const ThreeQubitState& state, const PrecessionUnitary& u1,
                       const PrecessionUnitary& u2, const PrecessionUnitary& u3);

// Unitary of the special configuration (B along x, B.v = 0, equal
// particles) at theta = (omega + Omega) t / 2.
PrecessionUnitary special_unitary(double theta);

// Closed-form probabilities for the special configuration, indexed like
// ThreeQubitState.
Probabilities ghz_closed_form(int epsilon, double theta);
Probabilities w_closed_form(WPhase phase, double theta);
// The flipped W state is the all-spin flip of W(-phi), which commutes with
// the special unitary.
Probabilities wflip_closed_form(WPhase phase, double theta);

// Closed form for an initial state if one exists (GHZ, W, flipped W).
std::optional<Probabilities> closed_form(const InitialStateSpec& spec, double theta);

}  // namespace spin3
