#include "spin3/qstate.hpp"

#include <cmath>
#include <numeric>

namespace spin3 {

namespace {

double norm_squared(const Amplitudes& a) {
  double sum = 0.0;
  for (const cd& z : a) sum += std::norm(z);
  return sum;
}

void require_normalized(double n2, const char* what) {
  if (!(std::abs(n2 - 1.0) <= kNormTolerance)) {
    throw DomainError(std::string(what) + " is not normalized (norm^2 = " +
                      std::to_string(n2) + ")");
  }
}

}  // namespace

BasisLabel BasisLabel::from_index(int n) {
  if (n < 0 || n > 7) throw DomainError("basis index out of range: " + std::to_string(n));
  return {spin_of(n, 0), spin_of(n, 1), spin_of(n, 2)};
}

BasisLabel BasisLabel::parse(const std::string& text) {
  if (text.size() != 3) throw DomainError("basis label must have 3 symbols: " + text);
  std::array<Spin, 3> s{};
  for (std::size_t p = 0; p < 3; ++p) {
    if (text[p] == '1') {
      s[p] = Spin::up;
    } else if (text[p] == 'b') {
      s[p] = Spin::down;
    } else {
      throw DomainError("basis label symbols are '1' or 'b': " + text);
    }
  }
  return {s[0], s[1], s[2]};
}

std::string BasisLabel::str() const {
  auto c = [](Spin s) { return s == Spin::up ? '1' : 'b'; };
  return {c(i), c(j), c(k)};
}

SingleQubitState::SingleQubitState(cd up, cd down) : up_(up), down_(down) {
  require_normalized(std::norm(up) + std::norm(down), "single-qubit state");
}

ThreeQubitState::ThreeQubitState(const Amplitudes& amplitudes) : amps_(amplitudes) {
  require_normalized(norm_squared(amps_), "three-qubit state");
}

ThreeQubitState::ThreeQubitState(const Vec8c& amplitudes) {
  for (int n = 0; n < 8; ++n) amps_[static_cast<std::size_t>(n)] = amplitudes(n);
  require_normalized(norm_squared(amps_), "three-qubit state");
}

ThreeQubitState ThreeQubitState::normalized(const Amplitudes& amplitudes) {
  const double n = std::sqrt(norm_squared(amplitudes));
  if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("cannot normalize a zero or non-finite vector");
  Amplitudes scaled = amplitudes;
  for (cd& z : scaled) z /= n;
  return ThreeQubitState(scaled);
}

ThreeQubitState ThreeQubitState::basis(BasisLabel label) {
  Amplitudes a{};
  a[static_cast<std::size_t>(label.index())] = 1.0;
  return ThreeQubitState(a);
}

Vec8c ThreeQubitState::vector() const {
  Vec8c v;
  for (int n = 0; n < 8; ++n) v(n) = amps_[static_cast<std::size_t>(n)];
  return v;
}

ThreeQubitState tensor3(const SingleQubitState& a, const SingleQubitState& b,
                        const SingleQubitState& c) {
  Amplitudes out{};
  for (int n = 0; n < 8; ++n) {
    out[static_cast<std::size_t>(n)] = a[spin_of(n, 0)] * b[spin_of(n, 1)] * c[spin_of(n, 2)];
  }
  return ThreeQubitState(out);
}

cd inner(const ThreeQubitState& x, const ThreeQubitState& y) {
  cd sum = 0.0;
  for (int n = 0; n < 8; ++n) sum += std::conj(x[n]) * y[n];
  return sum;
}

Probabilities probabilities(const ThreeQubitState& x) {
  Probabilities p{};
  for (int n = 0; n < 8; ++n) p[static_cast<std::size_t>(n)] = std::norm(x[n]);
  return p;
}

Marginals marginals(const ThreeQubitState& x) {
  static constexpr std::array<std::array<int, 2>, 3> kPairs{{{0, 1}, {1, 2}, {2, 0}}};
  Marginals m;
  const Probabilities p = probabilities(x);
  for (int n = 0; n < 8; ++n) {
    const double pn = p[static_cast<std::size_t>(n)];
    for (int q = 0; q < 3; ++q) {
      m.single[q][static_cast<std::size_t>(spin_of(n, q))] += pn;
      const auto [first, second] = kPairs[static_cast<std::size_t>(q)];
      m.pair[q][static_cast<std::size_t>(spin_of(n, first))]
            [static_cast<std::size_t>(spin_of(n, second))] += pn;
    }
  }
  return m;
}

double phase_insensitive_overlap(const ThreeQubitState& x, const ThreeQubitState& y) {
  return std::abs(inner(x, y));
}

}  // namespace spin3
