#include "spin3/evolution.hpp"

#include <cmath>

namespace spin3 {

namespace {

int index_of(const char* label) { return BasisLabel::parse(label).index(); }

std::size_t at(const char* label) { return static_cast<std::size_t>(index_of(label)); }

}  // namespace

double phase_angle(WPhase phase) {
  switch (phase) {
    case WPhase::zero:
      return 0.0;
    case WPhase::plus:
      return 2.0 * kPi / 3.0;
    case WPhase::minus:
      return -2.0 * kPi / 3.0;
  }
  return 0.0;
}

double phase_factor(WPhase phase) { return phase == WPhase::zero ? 3.0 : 0.0; }

ThreeQubitState ghz_state(int epsilon) {
  if (epsilon != 1 && epsilon != -1) throw DomainError("GHZ epsilon must be +1 or -1");
  const double h = 1.0 / std::sqrt(2.0);
  Amplitudes a{};
  a[at("111")] = h;
  a[at("bbb")] = epsilon * h;
  return ThreeQubitState(a);
}

ThreeQubitState w_state(WPhase phase) {
  const double phi = phase_angle(phase);
  const double r = 1.0 / std::sqrt(3.0);
  Amplitudes a{};
  a[at("11b")] = r;
  a[at("1b1")] = r * std::exp(-kI * phi);
  a[at("b11")] = r * std::exp(kI * phi);
  return ThreeQubitState(a);
}

ThreeQubitState wflip_state(WPhase phase) {
  const double phi = phase_angle(phase);
  const double r = 1.0 / std::sqrt(3.0);
  Amplitudes a{};
  a[at("bb1")] = r;
  a[at("b1b")] = r * std::exp(kI * phi);
  a[at("1bb")] = r * std::exp(-kI * phi);
  return ThreeQubitState(a);
}

ThreeQubitState make_initial_state(const InitialStateSpec& spec) {
  struct Visitor {
    ThreeQubitState operator()(const GhzSpec& s) const { return ghz_state(s.epsilon); }
    ThreeQubitState operator()(const WSpec& s) const { return w_state(s.phase); }
    ThreeQubitState operator()(const WFlipSpec& s) const { return wflip_state(s.phase); }
    ThreeQubitState operator()(const CustomSpec& s) const {
      return ThreeQubitState::normalized(s.amplitudes);
    }
  };
  return std::visit(Visitor{}, spec);
}

ThreeQubitState evolve(const ThreeQubitState& state, const PrecessionUnitary& u1,
                       const PrecessionUnitary& u2, const PrecessionUnitary& u3) {
  const std::array<Mat2c, 3> m{u1.matrix(), u2.matrix(), u3.matrix()};
  Amplitudes out{};
  for (int row = 0; row < 8; ++row) {
    cd sum = 0.0;
    for (int col = 0; col < 8; ++col) {
      const cd x = state[col];
      if (x == 0.0) continue;
      cd factor = 1.0;
      for (int p = 0; p < 3; ++p) {
        factor *= m[static_cast<std::size_t>(p)](static_cast<int>(spin_of(row, p)),
                                                 static_cast<int>(spin_of(col, p)));
      }
      sum += factor * x;
    }
    out[static_cast<std::size_t>(row)] = sum;
  }
  // Products of unitaries keep the norm up to rounding; renormalize the
  // last few ulps so long time series stay inside the tolerance.
  return ThreeQubitState::normalized(out);
}

PrecessionUnitary special_unitary(double theta) {
  return {cd(std::cos(theta), 0.0), cd(std::sin(theta), 0.0), 0.0};
}

Probabilities ghz_closed_form(int epsilon, double theta) {
  if (epsilon != 1 && epsilon != -1) throw DomainError("GHZ epsilon must be +1 or -1");
  const double s2 = std::pow(std::sin(2.0 * theta), 2);
  Probabilities p{};
  p.fill(s2 / 8.0);
  p[at("111")] = 0.5 * (1.0 - 0.75 * s2);
  p[at("bbb")] = 0.5 * (1.0 - 0.75 * s2);
  return p;
}

Probabilities w_closed_form(WPhase phase, double theta) {
  const double a2 = std::pow(std::cos(theta), 2);
  const double b2 = std::pow(std::sin(theta), 2);
  const double f = phase_factor(phase);
  const cd e = std::exp(kI * phase_angle(phase));
  // (1 - x f e^{-i phi})(1 - x f e^{i phi}) = |e^{i phi} - x f|^2 for real f.
  auto pair_term = [&](double x) { return std::norm(e - x * f); };

  Probabilities p{};
  p[at("111")] = a2 * a2 * b2 * f * f / 3.0;
  p[at("bbb")] = a2 * b2 * b2 * f * f / 3.0;
  p[at("1bb")] = b2 * pair_term(a2) / 3.0;
  p[at("b1b")] = b2 * pair_term(a2) / 3.0;
  p[at("bb1")] = b2 * std::pow(1.0 - a2 * f, 2) / 3.0;
  p[at("b11")] = a2 * pair_term(b2) / 3.0;
  p[at("1b1")] = a2 * pair_term(b2) / 3.0;
  p[at("11b")] = a2 * std::pow(1.0 - b2 * f, 2) / 3.0;
  return p;
}

Probabilities wflip_closed_form(WPhase phase, double theta) {
  const WPhase mirrored = phase == WPhase::plus    ? WPhase::minus
                          : phase == WPhase::minus ? WPhase::plus
                                                   : WPhase::zero;
  const Probabilities w = w_closed_form(mirrored, theta);
  Probabilities p{};
  for (std::size_t n = 0; n < 8; ++n) p[7 - n] = w[n];  // flipping every spin is n -> 7 - n
  return p;
}

std::optional<Probabilities> closed_form(const InitialStateSpec& spec, double theta) {
  if (const auto* g = std::get_if<GhzSpec>(&spec)) return ghz_closed_form(g->epsilon, theta);
  if (const auto* w = std::get_if<WSpec>(&spec)) return w_closed_form(w->phase, theta);
  if (const auto* w = std::get_if<WFlipSpec>(&spec)) return wflip_closed_form(w->phase, theta);
  return std::nullopt;
}

}  // namespace spin3
