#pragma once

#include <array>
#include <string>

#include "spin3/qstate.hpp"

namespace spin3 {

// Total J^2, total J_z and Z = (J1 x J2) . J3 for three spin-1/2 sites,
// built from sigma/2 at each site.
struct AngularOperators {
  Mat8c j2;
  Mat8c jz;
  Mat8c z;
};

const AngularOperators& angular_operators();

// (j, m, zeta) with j in {1/2, 3/2}, |m| <= j, zeta in {0, +-sqrt(3)/4}.
struct ZEigenLabel {
  double j = 0.0;
  double m = 0.0;
  double zeta = 0.0;

  std::string str() const;
  friend bool operator==(const ZEigenLabel&, const ZEigenLabel&) = default;
};

struct CatalogEntry {
  ZEigenLabel label;
  ThreeQubitState state;
};

// The eight coupled states: four j = 3/2 rows and four j = 1/2 rows with
// the +-2pi/3 phase patterns. Ordered (3/2,3/2), (3/2,-3/2), (3/2,1/2),
// (3/2,-1/2), (1/2,1/2,+), (1/2,1/2,-), (1/2,-1/2,+), (1/2,-1/2,-).
const std::array<CatalogEntry, 8>& catalog();

struct Classification {
  std::array<cd, 8> coefficients{};  // <catalog_n | state>
  std::size_t dominant = 0;
  bool ambiguous = false;            // another row ties the dominant weight
};

Classification classify(const ThreeQubitState& state, double tie_tolerance = 1e-9);

// Permutation of the three particles: the spin carried by particle p moves
// to slot perm[p] (0-based).
using Permutation = std::array<int, 3>;

Mat8c permutation_matrix(const Permutation& perm);
ThreeQubitState permutation_action(const Permutation& perm, const ThreeQubitState& state);
int permutation_sign(const Permutation& perm);

// Verifies P^dagger Z P = sign(perm) Z within `tolerance` and returns the sign.
// Throws NumericalError if the identity fails.
int check_z_parity(const Permutation& perm, double tolerance = 1e-12);

}  // namespace spin3
