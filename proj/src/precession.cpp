#include "spin3/precession.hpp"

#include <array>
#include <cmath>
#include <string>

#include <boost/numeric/odeint.hpp>

namespace spin3 {

namespace {

constexpr double kUnitTolerance = 1e-12;

void require_unit(const Vec3& v, const char* what) {
  if (!(std::abs(v.norm() - 1.0) <= kUnitTolerance)) {
    throw DomainError(std::string(what) + " must be a unit vector");
  }
}

// Rotation of v about the unit axis n by angle a (right-handed).
Vec3 rotate(const Vec3& v, const Vec3& n, double a) {
  const double c = std::cos(a);
  const double s = std::sin(a);
  return v * c + n.cross(v) * s + n * n.dot(v) * (1.0 - c);
}

}  // namespace

void FieldConfig::validate() const {
  if (!(magnitude > 0.0) || !std::isfinite(magnitude)) {
    throw DomainError("field magnitude must be positive");
  }
  require_unit(direction, "field direction");
}

double ParticleKinematics::gamma() const { return 1.0 / std::sqrt(1.0 - speed * speed); }

void ParticleKinematics::validate() const {
  if (!(mass > 0.0) || !std::isfinite(mass)) throw DomainError("mass must be positive");
  if (!std::isfinite(charge)) throw DomainError("charge must be finite");
  if (!std::isfinite(anomaly)) throw DomainError("anomalous moment must be finite");
  if (!(speed >= 0.0 && speed < 1.0)) throw DomainError("speed must lie in [0, 1)");
  require_unit(direction, "velocity direction");
}

Vec3 PrecessionRates::axis() const {
  if (Omega == 0.0) return Vec3::UnitX();
  return {Omega1 / Omega, 0.0, Omega3 / Omega};
}

Mat2c PrecessionUnitary::matrix() const {
  Mat2c m;
  m << alpha, -kI * beta, -kI * std::conj(beta), std::conj(alpha);
  return m;
}

PrecessionUnitary PrecessionUnitary::from_matrix(const Mat2c& m, double t) {
  // m(0,1) = -i beta.
  return {m(0, 0), kI * m(0, 1), t};
}

PrecessionRates rates(const FieldConfig& field, const ParticleKinematics& particle) {
  field.validate();
  particle.validate();

  const double gamma = particle.gamma();
  const double c = field.direction.dot(particle.direction);
  const double k = particle.anomaly * particle.charge * field.magnitude / (particle.mass * gamma);

  PrecessionRates r;
  r.omega = particle.charge * field.magnitude / (particle.mass * gamma);
  r.degenerate = std::abs(1.0 - std::abs(c)) <= kDegenerateTolerance;
  if (r.degenerate) {
    // gamma - (gamma - 1) = 1: the anomalous vector is k B.
    r.Omega = k;
    r.Omega1 = k;
    r.Omega3 = 0.0;
    return r;
  }
  r.Omega = k * std::sqrt(gamma * gamma - (gamma * gamma - 1.0) * c * c);
  r.Omega1 = k * (gamma - (gamma - 1.0) * c * c);
  r.Omega3 = k * (gamma - 1.0) * c * std::sqrt(1.0 - c * c);
  return r;
}

PrecessionUnitary unitary(const PrecessionRates& r, const Vec3& b, double t) {
  require_unit(b, "field direction components");
  const Vec3 l = r.axis();
  require_unit(l, "anomalous axis");

  const double c = std::cos(r.omega * t / 2.0);
  const double s = std::sin(r.omega * t / 2.0);
  const double cp = std::cos(r.Omega * t / 2.0);
  const double sp = std::sin(r.Omega * t / 2.0);
  const double l1 = l.x();
  const double l3 = l.z();
  const double b1 = b.x();
  const double b2 = b.y();
  const double b3 = b.z();

  const cd lead = cp - kI * l3 * sp;
  PrecessionUnitary u;
  u.alpha = lead * (c - kI * b3 * s) - l1 * sp * (b1 + kI * b2) * s;
  u.beta = lead * (b1 - kI * b2) * s + l1 * sp * (c + kI * b3 * s);
  u.t = t;
  return u;
}

PrecessionUnitary su2_product(const Vec3& n, double angle_n, const Vec3& b, double angle_b,
                              double t) {
  // (c1 - i s1 n.sigma)(c2 - i s2 b.sigma) = q0 - i q.sigma
  const double c1 = std::cos(angle_n / 2.0);
  const double s1 = std::sin(angle_n / 2.0);
  const double c2 = std::cos(angle_b / 2.0);
  const double s2 = std::sin(angle_b / 2.0);
  const double q0 = c1 * c2 - s1 * s2 * n.dot(b);
  const Vec3 q = c1 * s2 * b + c2 * s1 * n + s1 * s2 * n.cross(b);
  return {cd(q0, -q.z()), cd(q.x(), -q.y()), t};
}

Vec3 anomalous_vector(const FieldConfig& field, const ParticleKinematics& particle) {
  const double gamma = particle.gamma();
  const double k = particle.anomaly * particle.charge * field.magnitude / (particle.mass * gamma);
  const double c = field.direction.dot(particle.direction);
  return k * (gamma * field.direction - (gamma - 1.0) * c * particle.direction);
}

PrecessionUnitary particle_unitary(const FieldConfig& field, const ParticleKinematics& particle,
                                   double t) {
  const PrecessionRates r = rates(field, particle);
  const Vec3 anomalous = anomalous_vector(field, particle);
  const double size = anomalous.norm();
  const Vec3 n = size > 0.0 ? Vec3(anomalous / size) : field.direction;
  return su2_product(n, size * t, field.direction, r.omega * t, t);
}

Vec3 velocity_at(const FieldConfig& field, const ParticleKinematics& particle, double t) {
  const PrecessionRates r = rates(field, particle);
  return rotate(particle.velocity(), field.direction, -r.omega * t);
}

Vec3 precess_polarization_ode(const FieldConfig& field, const ParticleKinematics& particle,
                              const Vec3& s0, double t, const OdeOptions& options) {
  namespace odeint = boost::numeric::odeint;
  using State = std::array<double, 6>;

  field.validate();
  particle.validate();
  require_unit(s0, "initial polarization");
  if (t == 0.0) return s0;

  const double gamma = particle.gamma();
  const double omega = particle.charge * field.magnitude / (particle.mass * gamma);
  const double k = particle.anomaly * particle.charge * field.magnitude / (particle.mass * gamma);
  const Vec3 bhat = field.direction;

  // The velocity direction rides along so the anomalous axis follows it.
  auto system = [&](const State& x, State& dxdt, double) {
    const Vec3 vhat(x[0], x[1], x[2]);
    const Vec3 spin(x[3], x[4], x[5]);
    const Vec3 w = omega * bhat;
    const Vec3 anomalous = k * (gamma * bhat - (gamma - 1.0) * bhat.dot(vhat) * vhat);
    const Vec3 dv = -w.cross(vhat);
    const Vec3 ds = -(w + anomalous).cross(spin);
    dxdt = {dv.x(), dv.y(), dv.z(), ds.x(), ds.y(), ds.z()};
  };

  const Vec3 v0 = particle.direction;
  State x{v0.x(), v0.y(), v0.z(), s0.x(), s0.y(), s0.z()};

  std::size_t steps = 0;
  double last_time = 0.0;
  auto observer = [&](const State&, double time) {
    last_time = time;
    if (++steps > options.max_steps) {
      throw NumericalError("polarization ODE exceeded " + std::to_string(options.max_steps) +
                           " steps (reached t = " + std::to_string(time) + " of " +
                           std::to_string(t) + ")");
    }
  };

  const double rate = std::abs(omega) + std::abs(k) * gamma + 1e-300;
  const double dt0 = std::copysign(std::min(std::abs(t), 1e-3 / rate), t);
  auto stepper = odeint::make_controlled(options.abs_tol, options.rel_tol,
                                         odeint::runge_kutta_dopri5<State>());
  try {
    odeint::integrate_adaptive(stepper, system, x, 0.0, t, dt0, observer);
  } catch (const odeint::step_adjustment_error& e) {
    throw NumericalError(std::string("polarization ODE step control failed after ") +
                         std::to_string(steps) + " steps at t = " + std::to_string(last_time) +
                         ": " + e.what());
  }

  const Vec3 spin(x[3], x[4], x[5]);
  if (std::abs(spin.norm() - 1.0) > 1e-9) {
    throw NumericalError("polarization ODE drifted off the unit sphere (|S| - 1 = " +
                         std::to_string(spin.norm() - 1.0) + " after " + std::to_string(steps) +
                         " steps)");
  }
  return spin;
}

Vec3 polarization(cd up, cd down) {
  const cd cross = std::conj(up) * down;
  return {2.0 * cross.real(), 2.0 * cross.imag(), std::norm(up) - std::norm(down)};
}

Vec3 polarization_transported(const PrecessionUnitary& m, cd up, cd down) {
  Eigen::Vector2cd psi(up, down);
  const Eigen::Vector2cd moved = m.matrix().adjoint() * psi;
  return polarization(moved(0), moved(1));
}

double special_period(const PrecessionRates& r) { return 4.0 * kPi / (r.omega + r.Omega); }

}  // namespace spin3
