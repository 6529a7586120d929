#include "spin3/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <string>
#include <thread>

namespace spin3 {

namespace {

struct Prepared {
  ThreeQubitState initial;
  FrameMap map;
  bool special = false;
  double rate = 0.0;
  double b_sign = 1.0;  // B along +x or -x in the special configuration
};

ThreeQubitState evolve_lab(const Prepared& prep, double t) {
  std::array<PrecessionUnitary, 3> u;
  for (std::size_t p = 0; p < 3; ++p) u[p] = particle_unitary(prep.map.primed_field, prep.map.primed[p], t);
  if (prep.map.identity) return evolve(prep.initial, u[0], u[1], u[2]);
  const ThreeQubitState primed = rotate_spins(prep.map.rotations, prep.initial, Direction::forward);
  const ThreeQubitState moved = evolve(primed, u[0], u[1], u[2]);
  return rotate_spins(prep.map.rotations, moved, Direction::inverse);
}

Sample compute_sample(const Scenario& s, const Prepared& prep, double x) {
  Sample out;
  ThreeQubitState state = prep.initial;
  if (s.grid.kind == GridKind::theta) {
    out.theta = x;
    out.t = prep.rate != 0.0 ? 2.0 * x / prep.rate : std::numeric_limits<double>::quiet_NaN();
    const PrecessionUnitary u = special_unitary(prep.b_sign * x);
    state = evolve(prep.initial, u, u, u);
  } else {
    out.t = x;
    out.theta = prep.special ? prep.rate * x / 2.0 : std::numeric_limits<double>::quiet_NaN();
    state = evolve_lab(prep, x);
  }
  out.amplitudes = state.amplitudes();
  out.probabilities = probabilities(state);
  if (prep.special && s.output.closed_form) out.closed_form = closed_form(s.state, out.theta);
  if (s.output.tangles) out.tangles = tangles(state);
  return out;
}

}  // namespace

std::vector<double> Grid::values() const {
  std::vector<double> v(samples);
  if (samples == 1) {
    v[0] = start;
    return v;
  }
  const double step = (stop - start) / static_cast<double>(samples - 1);
  for (std::size_t n = 0; n < samples; ++n) v[n] = start + step * static_cast<double>(n);
  v.back() = stop;
  return v;
}

bool operator==(const ParticleKinematics& a, const ParticleKinematics& b) {
  return a.mass == b.mass && a.charge == b.charge && a.anomaly == b.anomaly &&
         a.speed == b.speed && a.direction == b.direction;
}

bool operator==(const EMField& a, const EMField& b) {
  return a.e_magnitude == b.e_magnitude && a.b_magnitude == b.b_magnitude &&
         a.e_direction == b.e_direction && a.b_direction == b.b_direction;
}

bool operator==(const Scenario& a, const Scenario& b) {
  return a.field == b.field && a.particles == b.particles && a.state == b.state &&
         a.grid == b.grid && a.output == b.output;
}

std::array<ParticleKinematics, 3> default_particles() {
  std::array<ParticleKinematics, 3> out;
  for (std::size_t p = 0; p < 3; ++p) {
    const double angle = 2.0 * kPi * static_cast<double>(p) / 3.0;
    out[p].mass = 1.0;
    out[p].charge = 1.0;
    out[p].anomaly = 0.00115965;
    out[p].speed = 0.5;
    out[p].direction = Vec3(0.0, std::cos(angle), std::sin(angle));
  }
  return out;
}

void Scenario::validate() const {
  field.validate();
  for (const auto& p : particles) p.validate();
  if (grid.samples == 0) throw DomainError("grid needs at least one sample");
  if (!(grid.stop >= grid.start)) throw DomainError("grid must be increasing");
  if (grid.kind == GridKind::theta && !is_special_configuration(*this)) {
    throw DomainError(
        "a theta grid needs the special configuration (E = 0, B along x, velocities "
        "orthogonal to B, identical particles and speeds)");
  }
  (void)make_initial_state(state);
}

bool is_special_configuration(const Scenario& s, double tolerance) {
  if (s.field.e_magnitude != 0.0) return false;
  const Vec3& b = s.field.b_direction;
  if (std::abs(std::abs(b.x()) - 1.0) > tolerance) return false;
  const ParticleKinematics& first = s.particles[0];
  for (const auto& p : s.particles) {
    if (std::abs(p.direction.dot(b)) > tolerance && p.speed > 0.0) return false;
    if (p.mass != first.mass || p.charge != first.charge || p.anomaly != first.anomaly ||
        p.speed != first.speed) {
      return false;
    }
  }
  return true;
}

double special_rate(const Scenario& s) {
  const PrecessionRates r = rates(s.magnetic(), s.particles[0]);
  return r.omega + r.Omega;
}

ThreeQubitState state_at(const Scenario& scenario, const ThreeQubitState& initial, double t) {
  Prepared prep{initial, frame_map_scenario(scenario.field, scenario.particles)};
  return evolve_lab(prep, t);
}

std::vector<Sample> time_series(const Scenario& scenario, std::size_t threads) {
  scenario.validate();
  Prepared prep{make_initial_state(scenario.state),
                frame_map_scenario(scenario.field, scenario.particles)};
  prep.special = is_special_configuration(scenario);
  if (prep.special) {
    prep.rate = special_rate(scenario);
    prep.b_sign = scenario.field.b_direction.x() > 0.0 ? 1.0 : -1.0;
  }

  const std::vector<double> grid = scenario.grid.values();
  std::vector<Sample> out(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, grid.size());

  auto worker = [&](std::size_t first) {
    for (std::size_t n = first; n < grid.size(); n += threads) {
      try {
        out[n] = compute_sample(scenario, prep, grid[n]);
      } catch (...) {
        errors[n] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < threads; ++w) pool.emplace_back(worker, w);
    worker(0);
  }

  for (std::size_t n = 0; n < errors.size(); ++n) {
    if (!errors[n]) continue;
    try {
      std::rethrow_exception(errors[n]);
    } catch (const std::exception& e) {
      throw NumericalError("sample " + std::to_string(n) + " (grid value " +
                           std::to_string(grid[n]) + "): " + e.what());
    }
  }
  return out;
}

}  // namespace spin3
