#pragma once

#include <array>

#include "spin3/precession.hpp"
#include "spin3/qstate.hpp"

// Orthogonal constant E and B with E < B: boost to the frame where only a
// magnetic field remains, and the Wigner rotations that come with it.

namespace spin3 {

struct EMField {
  double e_magnitude = 0.0;
  double b_magnitude = 1.0;
  Vec3 e_direction = Vec3::UnitZ();
  Vec3 b_direction = Vec3::UnitX();

  // Throws DomainError unless 0 <= E < B, both directions are unit vectors
  // and E.B = 0 within 1e-12.
  void validate() const;
};

struct FourVelocity {
  double u0 = 1.0;
  Vec3 u = Vec3::Zero();

  static FourVelocity rest() { return {}; }
  static FourVelocity from_velocity(const Vec3& v);  // |v| < 1
  Vec3 velocity() const { return u / u0; }
  double interval() const { return u0 * u0 - u.squaredNorm(); }  // 1 for timelike unit
  FourVelocity reversed() const { return {u0, -u}; }
};

struct ReducingBoost {
  FourVelocity boost;       // gamma_d (1, (E/B) E x B)
  double b_prime = 0.0;     // sqrt(B^2 - E^2)
};

ReducingBoost reducing_boost(const EMField& field);

// L(by) u: the pure boost taking the rest frame to `by`, applied to u.
FourVelocity boost(const FourVelocity& by, const FourVelocity& u);

// 4x4 pure-boost matrix with L(w) (1, 0) = w.
Eigen::Matrix4d boost_matrix(const FourVelocity& w);

struct WignerRotation {
  double delta = 0.0;          // [0, pi]
  Vec3 axis = Vec3::UnitZ();   // meaningful when delta > 0

  static WignerRotation none() { return {}; }
};

// Rotation left over when u is boosted by u2: u0' = u0 u2_0 + u.u2,
// cos(delta/2) = b / sqrt(2a), axis along u x u2.
WignerRotation wigner(const FourVelocity& u, const FourVelocity& u2);

enum class Direction { forward, inverse };

// 2x2 spin matrix cos(delta/2) + i sin(delta/2) k.sigma; the inverse flips delta.
Mat2c spin_rotation_matrix(const WignerRotation& r, Direction direction);

SingleQubitState rotate_spin(const WignerRotation& r, const SingleQubitState& s,
                             Direction direction);

// Applies per-particle rotations to a three-qubit state.
ThreeQubitState rotate_spins(const std::array<WignerRotation, 3>& rotations,
                             const ThreeQubitState& state, Direction direction);

struct FrameMap {
  FieldConfig primed_field;                       // B' along B
  std::array<ParticleKinematics, 3> primed;      // boosted velocities
  std::array<WignerRotation, 3> rotations;       // lab -> primed spin rotations
  FourVelocity frame;                             // applied boost
  bool identity = true;                           // E = 0
};

// The boosted frame moves with the drift velocity (E/B) E x B, so lab
// 4-velocities are carried into it by the reversed boost.
FrameMap frame_map_scenario(const EMField& field,
                            const std::array<ParticleKinematics, 3>& particles);

}  // namespace spin3
