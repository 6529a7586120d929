#include "spin3/emboost.hpp"

#include <algorithm>
#include <cmath>

namespace spin3 {

namespace {

constexpr double kUnitTolerance = 1e-12;

}  // namespace

void EMField::validate() const {
  if (std::abs(e_direction.norm() - 1.0) > kUnitTolerance ||
      std::abs(b_direction.norm() - 1.0) > kUnitTolerance) {
    throw DomainError("field directions must be unit vectors");
  }
  if (!(b_magnitude > 0.0)) throw DomainError("B must be positive");
  if (!(e_magnitude >= 0.0)) throw DomainError("E must be non-negative");
  if (!(e_magnitude < b_magnitude)) {
    throw DomainError("E must be < B (no real reducing boost for E >= B)");
  }
  if (e_magnitude > 0.0 && std::abs(e_direction.dot(b_direction)) > kUnitTolerance) {
    throw DomainError("E must be orthogonal to B");
  }
}

FourVelocity FourVelocity::from_velocity(const Vec3& v) {
  const double v2 = v.squaredNorm();
  if (!(v2 < 1.0)) throw DomainError("speed must be < 1");
  const double gamma = 1.0 / std::sqrt(1.0 - v2);
  return {gamma, gamma * v};
}

ReducingBoost reducing_boost(const EMField& field) {
  field.validate();
  const double ratio = field.e_magnitude / field.b_magnitude;
  const double gamma = 1.0 / std::sqrt(1.0 - ratio * ratio);
  ReducingBoost out;
  out.boost = {gamma, gamma * ratio * field.e_direction.cross(field.b_direction)};
  out.b_prime = std::sqrt(field.b_magnitude * field.b_magnitude -
                          field.e_magnitude * field.e_magnitude);
  return out;
}

Eigen::Matrix4d boost_matrix(const FourVelocity& w) {
  Eigen::Matrix4d l = Eigen::Matrix4d::Identity();
  l(0, 0) = w.u0;
  l.block<1, 3>(0, 1) = w.u.transpose();
  l.block<3, 1>(1, 0) = w.u;
  l.block<3, 3>(1, 1) += w.u * w.u.transpose() / (1.0 + w.u0);
  return l;
}

FourVelocity boost(const FourVelocity& by, const FourVelocity& u) {
  const double u0 = u.u0 * by.u0 + u.u.dot(by.u);
  const Vec3 spatial = u.u + by.u * (u.u0 + by.u.dot(u.u) / (1.0 + by.u0));
  return {u0, spatial};
}

WignerRotation wigner(const FourVelocity& u, const FourVelocity& u2) {
  const Vec3 cross = u.u.cross(u2.u);
  const double cross_norm = cross.norm();
  if (cross_norm == 0.0) return WignerRotation::none();

  const double u0p = u.u0 * u2.u0 + u.u.dot(u2.u);
  const double a = (1.0 + u.u0) * (1.0 + u2.u0) * (1.0 + u0p);
  const double b = 1.0 + u.u0 + u2.u0 + u0p;
  const double cos_half = std::clamp(b / std::sqrt(2.0 * a), 0.0, 1.0);
  return {2.0 * std::acos(cos_half), cross / cross_norm};
}

Mat2c spin_rotation_matrix(const WignerRotation& r, Direction direction) {
  const double delta = direction == Direction::forward ? r.delta : -r.delta;
  const double c = std::cos(delta / 2.0);
  const double s = std::sin(delta / 2.0);
  const Vec3& k = r.axis;
  Mat2c m;
  m << cd(c, s * k.z()), kI * s * cd(k.x(), -k.y()),
      kI * s * cd(k.x(), k.y()), cd(c, -s * k.z());
  return m;
}

SingleQubitState rotate_spin(const WignerRotation& r, const SingleQubitState& s,
                             Direction direction) {
  const Mat2c m = spin_rotation_matrix(r, direction);
  const Eigen::Vector2cd out = m * Eigen::Vector2cd(s.up(), s.down());
  const double n = out.norm();
  return {out(0) / n, out(1) / n};
}

ThreeQubitState rotate_spins(const std::array<WignerRotation, 3>& rotations,
                             const ThreeQubitState& state, Direction direction) {
  std::array<Mat2c, 3> m;
  for (std::size_t p = 0; p < 3; ++p) m[p] = spin_rotation_matrix(rotations[p], direction);
  Amplitudes out{};
  for (int row = 0; row < 8; ++row) {
    cd sum = 0.0;
    for (int col = 0; col < 8; ++col) {
      cd factor = 1.0;
      for (int p = 0; p < 3; ++p) {
        factor *= m[static_cast<std::size_t>(p)](static_cast<int>(spin_of(row, p)),
                                                 static_cast<int>(spin_of(col, p)));
      }
      sum += factor * state[col];
    }
    out[static_cast<std::size_t>(row)] = sum;
  }
  return ThreeQubitState::normalized(out);
}

FrameMap frame_map_scenario(const EMField& field,
                            const std::array<ParticleKinematics, 3>& particles) {
  const ReducingBoost reduced = reducing_boost(field);
  FrameMap map;
  map.primed_field = {reduced.b_prime, field.b_direction};
  map.identity = field.e_magnitude == 0.0;
  map.frame = reduced.boost.reversed();
  map.primed = particles;
  map.rotations.fill(WignerRotation::none());
  if (map.identity) return map;

  for (std::size_t p = 0; p < 3; ++p) {
    particles[p].validate();
    const FourVelocity lab = FourVelocity::from_velocity(particles[p].velocity());
    const FourVelocity primed = boost(map.frame, lab);
    map.rotations[p] = wigner(lab, map.frame);
    const Vec3 v = primed.velocity();
    const double speed = v.norm();
    map.primed[p].speed = speed;
    if (speed > 0.0) map.primed[p].direction = v / speed;
  }
  return map;
}

}  // namespace spin3
