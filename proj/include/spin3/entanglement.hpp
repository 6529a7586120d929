#pragma once

#include <array>

#include <Eigen/Core>

#include "spin3/qstate.hpp"

namespace spin3 {

// Particle pairs in cyclic order. The pair (a, b) is what remains after
// tracing out the third particle: (1,2) <- 3, (2,3) <- 1, (3,1) <- 2.
enum class Pair { p12, p23, p31 };

// Traced particle (1-based) for a pair, and the pair left by a traced particle.
int traced_particle(Pair pair);
Pair remaining_pair(int traced);

// Split of a pure state on the traced particle t and the remaining pair (a, b):
//   |psi> = (f0|11> + f1|1b> + f2|b1> + f3|bb>)|1>_t
//         + (g0|bb> + g1|b1> + g2|1b> + g3|11>)|b>_t
// The g row runs through the pair basis in reverse.
struct SplitCoefficients {
  std::array<cd, 4> f{};
  std::array<cd, 4> g{};
};

SplitCoefficients split(const ThreeQubitState& state, int traced);

// Reduced density matrix of the remaining pair in the basis |11>, |1b>, |b1>, |bb>.
class TwoQubitDensity {
 public:
  // Throws NumericalError unless Hermitian and unit-trace within 1e-12 and
  // no eigenvalue lies below -1e-10.
  explicit TwoQubitDensity(const Mat4c& rho);

  const Mat4c& matrix() const { return rho_; }
  cd operator()(int r, int c) const { return rho_(r, c); }

 private:
  Mat4c rho_;
};

TwoQubitDensity reduce(const ThreeQubitState& state, int traced);

// (sigma_y x sigma_y) rho^* (sigma_y x sigma_y)
Mat4c spin_flip(const Mat4c& rho);

// Eigenvalues of rho * spin_flip(rho), real parts clamped at zero, sorted
// descending. Throws NumericalError on solver failure or a real part below
// -1e-8. Small eigenvalues carry an absolute error near machine epsilon, so
// their square roots are only good to ~1e-8.
std::array<double, 4> flip_spectrum(const Mat4c& rho);

// Decomposition rho = v0 v0^dagger + v1 v1^dagger of the reduced pair read
// straight off a pure state: v0 = (f0..f3), v1 = (g3, g2, g1, g0).
std::array<Eigen::Vector4cd, 2> pair_ensemble(const ThreeQubitState& state, int traced);

// Square roots of the eigenvalues of rho * rho-tilde for rho = sum v v^dagger,
// computed as the singular values of T_ij = v_i^dagger (sigma_y x sigma_y) v_j^*.
// Sorted descending. Exact zeros are not lost to a square root.
std::array<double, 2> flip_roots(const std::array<Eigen::Vector4cd, 2>& ensemble);

double tangle3_spectral(const ThreeQubitState& state);
double tangle3_polynomial(const ThreeQubitState& state);

// Hyperdeterminant pieces d1, d2, d3 on the split with the third particle traced.
struct HyperdeterminantTerms {
  cd d1, d2, d3;
};
HyperdeterminantTerms hyperdeterminant_terms(const SplitCoefficients& s);

// Squared concurrence of a general two-qubit density matrix (eigen route).
double concurrence_squared(const Mat4c& rho);

double tangle2(const ThreeQubitState& state, Pair pair);

struct TangleReport {
  double tau123 = 0.0;
  double tau12 = 0.0;
  double tau23 = 0.0;
  double tau31 = 0.0;
};

TangleReport tangles(const ThreeQubitState& state);

}  // namespace spin3
