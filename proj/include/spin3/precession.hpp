#pragma once

#include "spin3/types.hpp"

// Single-particle spin precession in a constant magnetic field.
//
// Natural units (c = hbar = 1). The time unit is whatever the caller's
// (e, m, B) imply: rates are e*B/m in those units.

namespace spin3 {

struct FieldConfig {
  double magnitude = 1.0;          // B > 0
  Vec3 direction = Vec3::UnitX();  // unit vector

  // Throws DomainError on B <= 0 or a non-unit direction.
  void validate() const;
};

struct ParticleKinematics {
  double mass = 1.0;         // > 0
  double charge = 1.0;       // signed
  double anomaly = 0.0;      // (g - 2) / 2, signed
  double speed = 0.0;        // [0, 1)
  Vec3 direction = Vec3::UnitY();  // unit velocity direction

  double gamma() const;
  Vec3 velocity() const { return speed * direction; }
  void validate() const;
};

// Rates and anomalous-precession axis. The axis components are given in the
// frame (B, B x v, B x (B x v)) normalized, where the middle one vanishes.
struct PrecessionRates {
  double omega = 0.0;   // cyclotron rate e B / (m gamma), signed
  double Omega = 0.0;   // anomalous rate, signed with alpha*e
  double Omega1 = 0.0;  // component along B
  double Omega3 = 0.0;  // component along B x (B x v) / |B x v|
  bool degenerate = false;  // |B.v| = 1: axis collapses onto B

  // Unit axis (l1, 0, l3). Falls back to (1, 0, 0) when Omega = 0.
  Vec3 axis() const;
};

// M = [[alpha, -i beta], [-i conj(beta), conj(alpha)]].
struct PrecessionUnitary {
  cd alpha = 1.0;
  cd beta = 0.0;
  double t = 0.0;

  Mat2c matrix() const;
  static PrecessionUnitary identity() { return {}; }
  static PrecessionUnitary from_matrix(const Mat2c& m, double t = 0.0);
};

// |B.v| within this distance of 1 takes the degenerate branch.
inline constexpr double kDegenerateTolerance = 1e-12;

PrecessionRates rates(const FieldConfig& field, const ParticleKinematics& particle);

// Closed-form precession parameters for
//   M = exp(-i Omega t/2 (l.sigma)) exp(-i omega t/2 (b.sigma)),
// with l = rates.axis() and b the field direction components in the same
// Pauli frame. Throws DomainError for a non-unit b.
PrecessionUnitary unitary(const PrecessionRates& r, const Vec3& b, double t);

// Same product for arbitrary unit axes n and b and angles
// (Omega t, omega t): exp(-i a/2 n.sigma) exp(-i c/2 b.sigma).
PrecessionUnitary su2_product(const Vec3& n, double angle_n, const Vec3& b, double angle_b,
                              double t = 0.0);

// Lab-frame anomalous precession vector at t = 0 (vector form of the rate).
Vec3 anomalous_vector(const FieldConfig& field, const ParticleKinematics& particle);

// Precession unitary of one particle with the Pauli matrices aligned to the
// lab axes. The anomalous axis is the t = 0 direction; the cyclotron factor
// on the right carries its rotation with the velocity.
PrecessionUnitary particle_unitary(const FieldConfig& field, const ParticleKinematics& particle,
                                   double t);

// Velocity at time t: rigid rotation about B at rate omega (dv/dt = -omega x v).
Vec3 velocity_at(const FieldConfig& field, const ParticleKinematics& particle, double t);

struct OdeOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  std::size_t max_steps = 2'000'000;
};

// Integrates the coupled velocity / polarization equations
//   dv/dt = -omega x v,  dS/dt = -(omega + Omega(v)) x S
// from S(0) = s0 to t with an adaptive Dormand-Prince scheme.
// Throws NumericalError with step diagnostics when the integrator gives up.
Vec3 precess_polarization_ode(const FieldConfig& field, const ParticleKinematics& particle,
                              const Vec3& s0, double t, const OdeOptions& options = {});

// Spin expectation <psi| M sigma M^dagger |psi> for a single-qubit state
// given by (up, down) amplitudes. This is the polarization the ODE above
// produces from S(0) = <psi|sigma|psi>.
Vec3 polarization_transported(const PrecessionUnitary& m, cd up, cd down);

// <psi|sigma|psi>.
Vec3 polarization(cd up, cd down);

// Period in t of M for B.v = 0: 4 pi / (omega + Omega).
double special_period(const PrecessionRates& r);

}  // namespace spin3
