#pragma once

#include <array>
#include <string>

#include "spin3/types.hpp"

namespace spin3 {

inline constexpr double kNormTolerance = 1e-12;

enum class Spin : int { up = 0, down = 1 };  // |1> and |1bar>

// Label |ijk> of a three-qubit basis state.
//
// Index encoding: 4*b(i) + 2*b(j) + b(k) with b(up)=0, b(down)=1, so
// particle 1 is the most significant bit and index 0 is |111>.
struct BasisLabel {
  Spin i = Spin::up;
  Spin j = Spin::up;
  Spin k = Spin::up;

  constexpr int index() const {
    return 4 * static_cast<int>(i) + 2 * static_cast<int>(j) + static_cast<int>(k);
  }
  static BasisLabel from_index(int n);
  // Parses "111", "11b", "b1b", ... ('b' for the barred state).
  static BasisLabel parse(const std::string& text);
  // Inverse of parse.
  std::string str() const;

  friend constexpr bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

// Spin of particle `particle` (0-based) in basis index `n`.
constexpr Spin spin_of(int n, int particle) {
  return static_cast<Spin>((n >> (2 - particle)) & 1);
}

class SingleQubitState {
 public:
  // Throws DomainError unless |up|^2 + |down|^2 = 1 within kNormTolerance.
  SingleQubitState(cd up, cd down);

  static SingleQubitState spin_up() { return {1.0, 0.0}; }
  static SingleQubitState spin_down() { return {0.0, 1.0}; }

  cd up() const { return up_; }
  cd down() const { return down_; }
  cd operator[](Spin s) const { return s == Spin::up ? up_ : down_; }

 private:
  cd up_;
  cd down_;
};

using Amplitudes = std::array<cd, 8>;
using Probabilities = std::array<double, 8>;

class ThreeQubitState {
 public:
  // Throws DomainError if the amplitudes are not normalized within kNormTolerance.
  explicit ThreeQubitState(const Amplitudes& amplitudes);
  explicit ThreeQubitState(const Vec8c& amplitudes);

  // Rescales to unit norm; throws DomainError for the zero vector.
  static ThreeQubitState normalized(const Amplitudes& amplitudes);
  static ThreeQubitState basis(BasisLabel label);

  cd operator[](int index) const { return amps_[static_cast<std::size_t>(index)]; }
  cd operator[](BasisLabel label) const { return (*this)[label.index()]; }
  const Amplitudes& amplitudes() const { return amps_; }
  Vec8c vector() const;

 private:
  Amplitudes amps_{};
};

ThreeQubitState tensor3(const SingleQubitState& a, const SingleQubitState& b,
                        const SingleQubitState& c);

// Conjugate-linear in x.
cd inner(const ThreeQubitState& x, const ThreeQubitState& y);

Probabilities probabilities(const ThreeQubitState& x);

struct Marginals {
  // single[p][s]: probability that particle p has spin s.
  std::array<std::array<double, 2>, 3> single{};
  // pair[q][s][r] for pairs q = (1,2), (2,3), (3,1): probability that the
  // first particle of the pair has spin s and the second has spin r.
  std::array<std::array<std::array<double, 2>, 2>, 3> pair{};
};

Marginals marginals(const ThreeQubitState& x);

// |<x|y>|, the overlap modulo a global phase.
double phase_insensitive_overlap(const ThreeQubitState& x, const ThreeQubitState& y);

}  // namespace spin3
