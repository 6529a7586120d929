// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "spin3/angmom.hpp"
#include "spin3/entanglement.hpp"
#include "spin3/simulation.hpp"

using namespace spin3;

namespace {

struct Part {
  std::string label;
  double error;
  double tolerance;
  bool passed() const { return error <= tolerance; }
};

using Criterion = std::function<std::vector<Part>()>;

std::size_t at(const char* label) {
  return static_cast<std::size_t>(BasisLabel::parse(label).index());
}

Scenario special_scenario(const InitialStateSpec& state, Grid grid) {
  Scenario s;
  s.particles = default_particles();
  s.state = state;
  s.grid = grid;
  return s;
}

Probabilities sample_at(const InitialStateSpec& state, double theta) {
  return time_series(special_scenario(state, {GridKind::theta, theta, theta, 1}), 1)
      .front()
      .probabilities;
}

double worst_over(const Probabilities& got, const Probabilities& want) {
  double worst = 0.0;
  for (std::size_t n = 0; n < 8; ++n) worst = std::max(worst, std::abs(got[n] - want[n]));
  return worst;
}

// Lab-time grid covering theta in [0, pi] for the special configuration.
Grid time_grid(const InitialStateSpec& state, std::size_t samples) {
  const double rate = special_rate(special_scenario(state, {}));
  return {GridKind::time, 0.0, 2.0 * kPi / rate, samples};
}

std::vector<Part> ghz_probabilities() {
  double worst = 0.0;
  for (int eps : {1, -1}) {
    const Scenario s = special_scenario(GhzSpec{eps}, time_grid(GhzSpec{eps}, 512));
    for (const Sample& x : time_series(s)) {
      const double s2 = std::pow(std::sin(2.0 * x.theta), 2);
      Probabilities want{};
      want.fill(s2 / 8.0);
      want[at("111")] = want[at("bbb")] = 0.5 * (1.0 - 0.75 * s2);
      worst = std::max(worst, worst_over(x.probabilities, want));
    }
  }
  double quarter = 0.0;
  for (int eps : {1, -1})
    for (double p : sample_at(GhzSpec{eps}, kPi / 4.0)) quarter = std::max(quarter, std::abs(p - 0.125));
  return {{"512-point grid", worst, 1e-10}, {"theta = pi/4", quarter, 1e-12}};
}

Probabilities w_zero_family(double theta) {
  const double a2 = std::pow(std::cos(theta), 2);
  const double b2 = std::pow(std::sin(theta), 2);
  Probabilities p{};
  p[at("111")] = 3.0 * a2 * a2 * b2;
  p[at("bbb")] = 3.0 * a2 * b2 * b2;
  for (const char* l : {"bb1", "1bb", "b1b"}) p[at(l)] = b2 * std::pow(1.0 - 3.0 * a2, 2) / 3.0;
  for (const char* l : {"b11", "1b1", "11b"}) p[at(l)] = a2 * std::pow(1.0 - 3.0 * b2, 2) / 3.0;
  return p;
}

std::vector<Part> w_zero() {
  const Scenario s = special_scenario(WSpec{WPhase::zero}, time_grid(WSpec{WPhase::zero}, 512));
  double worst = 0.0;
  for (const Sample& x : time_series(s)) worst = std::max(worst, worst_over(x.probabilities, w_zero_family(x.theta)));

  const double ninth = 1.0 / 9.0;
  Probabilities at_two_thirds{};
  at_two_thirds[at("111")] = 4.0 * ninth;
  at_two_thirds[at("bbb")] = 2.0 * ninth;
  for (const char* l : {"bb1", "1bb", "b1b"}) at_two_thirds[at(l)] = ninth;
  Probabilities at_one_third{};
  at_one_third[at("111")] = 2.0 * ninth;
  at_one_third[at("bbb")] = 4.0 * ninth;
  for (const char* l : {"b11", "1b1", "11b"}) at_one_third[at(l)] = ninth;

  const double e1 = worst_over(sample_at(WSpec{WPhase::zero}, std::acos(std::sqrt(2.0 / 3.0))), at_two_thirds);
  const double e2 = worst_over(sample_at(WSpec{WPhase::zero}, std::acos(std::sqrt(1.0 / 3.0))), at_one_third);
  return {{"3 a^4 b^2 family", worst, 1e-10}, {"extrema a^2 = 2/3", e1, 1e-12},
          {"extrema a^2 = 1/3", e2, 1e-12}};
}

std::vector<Part> w_third_turn() {
  double zeros = 0.0;
  double triplets = 0.0;
  for (WPhase phase : {WPhase::plus, WPhase::minus}) {
    const Scenario s = special_scenario(WSpec{phase}, time_grid(WSpec{phase}, 512));
    for (const Sample& x : time_series(s)) {
      const double a2 = std::pow(std::cos(x.theta), 2);
      const double b2 = std::pow(std::sin(x.theta), 2);
      zeros = std::max({zeros, x.probabilities[at("111")], x.probabilities[at("bbb")]});
      for (const char* l : {"b11", "1b1", "11b"})
        triplets = std::max(triplets, std::abs(x.probabilities[at(l)] - a2 / 3.0));
      for (const char* l : {"bb1", "1bb", "b1b"})
        triplets = std::max(triplets, std::abs(x.probabilities[at(l)] - b2 / 3.0));
    }
  }
  return {{"P_111 = P_bbb = 0", zeros, 1e-12}, {"triplets a^2/3, b^2/3", triplets, 1e-10}};
}

// Kinematics away from the special configuration: oblique velocities, mixed anomalies.
Scenario general_scenario(const InitialStateSpec& state) {
  Scenario s;
  s.field = {0.0, 1.3, Vec3::UnitZ(), Vec3(1.0, 2.0, 2.0).normalized()};
  s.particles = default_particles();
  s.particles[0].direction = Vec3(0.3, 0.4, 0.866).normalized();
  s.particles[1].speed = 0.8;
  s.particles[2].anomaly = -0.15;
  s.state = state;
  s.grid = {GridKind::time, 0.0, 60.0, 200};
  return s;
}

std::vector<Part> tangle_values() {
  double ghz = 0.0;
  for (int eps : {1, -1}) {
    ghz = std::max(ghz, std::abs(tangle3_spectral(ghz_state(eps)) - 1.0));
    for (const Scenario& s : {special_scenario(GhzSpec{eps}, time_grid(GhzSpec{eps}, 256)),
                              general_scenario(GhzSpec{eps})})
      for (const Sample& x : time_series(s)) ghz = std::max(ghz, std::abs(x.tangles->tau123 - 1.0));
  }
  const PrecessionUnitary quarter = special_unitary(kPi / 4.0);
  const ThreeQubitState spot = evolve(ghz_state(1), quarter, quarter, quarter);
  const HyperdeterminantTerms d = hyperdeterminant_terms(split(spot, 3));
  const double spot_error = std::max({std::abs(tangle3_polynomial(spot) - 1.0),
                                      std::abs(tangle3_spectral(spot) - 1.0),
                                      std::abs(std::abs(d.d1) - 4.0 / 64.0),
                                      std::abs(d.d2 / d.d1 - 1.5), std::abs(d.d3 / d.d1 + 0.5)});

  Amplitudes plus{};
  plus.fill(1.0 / std::sqrt(8.0));
  const ThreeQubitState all_plus(plus);
  const double plus_error = std::max(tangle3_polynomial(all_plus), tangle3_spectral(all_plus));

  double w3 = 0.0;
  double w2 = 0.0;
  for (WPhase phase : {WPhase::zero, WPhase::plus, WPhase::minus}) {
    for (const Scenario& s : {special_scenario(WSpec{phase}, time_grid(WSpec{phase}, 256)),
                              general_scenario(WSpec{phase})}) {
      for (const Sample& x : time_series(s)) {
        const TangleReport& t = *x.tangles;
        w3 = std::max(w3, std::abs(t.tau123));
        w2 = std::max({w2, std::abs(t.tau12 - 4.0 / 9.0), std::abs(t.tau23 - 4.0 / 9.0),
                       std::abs(t.tau31 - 4.0 / 9.0)});
      }
    }
  }
  return {{"GHZ stays 1", ghz, 1e-9},       {"quarter-turn spot value", spot_error, 1e-9},
          {"all-plus state", plus_error, 1e-10}, {"W three-tangle", w3, 1e-9},
          {"W pair tangles 4/9", w2, 1e-9}};
}

std::vector<Part> tangle_routes() {
  std::mt19937_64 rng(2024);
  double routes = 0.0;
  double trace = 0.0;
  static constexpr int kPairs[3][3] = {{3, 0, 1}, {1, 1, 2}, {2, 2, 0}};
  for (int trial = 0; trial < 1000; ++trial) {
    const Vec8c v = oracle::random_state(rng);
    const ThreeQubitState s(v);
    routes = std::max(routes, std::abs(tangle3_spectral(s) - tangle3_polynomial(s)));
    for (const auto& p : kPairs)
      trace = std::max(trace, oracle::max_abs(reduce(s, p[0]).matrix() - oracle::partial_trace(v, p[1], p[2])));
  }
  return {{"spectral vs polynomial, 1000 states", routes, 1e-9},
          {"partial trace vs projectors", trace, 1e-12}};
}

std::vector<Part> catalog_table() {
  std::array<std::array<Mat8c, 3>, 3> j;
  for (int site = 0; site < 3; ++site)
    for (int a = 0; a < 3; ++a)
      j[static_cast<std::size_t>(site)][static_cast<std::size_t>(a)] = oracle::embed(0.5 * oracle::sigma(a), site);
  Mat8c j2 = Mat8c::Zero();
  for (std::size_t a = 0; a < 3; ++a) {
    const Mat8c total = j[0][a] + j[1][a] + j[2][a];
    j2 += total * total;
  }
  const Mat8c jz = j[0][2] + j[1][2] + j[2][2];
  auto t = [&](std::size_t a, std::size_t b, std::size_t c) { return Mat8c(j[0][a] * j[1][b] * j[2][c]); };
  const Mat8c z = t(0, 1, 2) + t(1, 2, 0) + t(2, 0, 1) - t(0, 2, 1) - t(2, 1, 0) - t(1, 0, 2);

  double eigen = 0.0;
  for (const CatalogEntry& e : catalog()) {
    const Vec8c v = e.state.vector();
    const ZEigenLabel& l = e.label;
    eigen = std::max({eigen, oracle::max_abs(j2 * v - l.j * (l.j + 1.0) * v),
                      oracle::max_abs(jz * v - l.m * v), oracle::max_abs(z * v - l.zeta * v)});
  }
  double parity = 0.0;
  const std::array<std::pair<Permutation, double>, 6> perms{{{{0, 1, 2}, 1.0},
                                                             {{1, 2, 0}, 1.0},
                                                             {{2, 0, 1}, 1.0},
                                                             {{1, 0, 2}, -1.0},
                                                             {{0, 2, 1}, -1.0},
                                                             {{2, 1, 0}, -1.0}}};
  for (const auto& [perm, sign] : perms) {
    const Mat8c p = permutation_matrix(perm);
    parity = std::max(parity, oracle::max_abs(p.adjoint() * z * p - sign * z));
  }
  const double h = 1.0 / std::sqrt(2.0);
  double exact = 0.0;
  for (int eps : {1, -1}) {
    const Classification c = classify(ghz_state(eps));
    if (c.coefficients[0] != cd(h) || c.coefficients[1] != cd(eps * h)) exact = 1.0;
  }
  return {{"eigenvalues (j(j+1), m, zeta)", eigen, 1e-12},
          {"Z parity under S3", parity, 1e-12},
          {"GHZ coefficients exactly 1/sqrt2", exact, 0.0}};
}

std::vector<Part> precession_oracle() {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto direction = [&] { return Vec3(u(rng), u(rng), u(rng)).normalized(); };
  double ode = 0.0;
  double unit = 0.0;
  for (int trial = 0; trial < 40; ++trial) {
    const FieldConfig f{0.5 + std::abs(u(rng)), direction()};
    const ParticleKinematics p{1.0 + std::abs(u(rng)), u(rng), 0.3 * u(rng), 0.9 * std::abs(u(rng)),
                               direction()};
    const Vec3 s0 = direction();
    // Spinor with polarization s0.
    const double polar = std::acos(std::clamp(s0.z(), -1.0, 1.0));
    const double azimuth = std::atan2(s0.y(), s0.x());
    const cd up = std::cos(polar / 2.0);
    const cd down = std::exp(cd(0.0, azimuth)) * std::sin(polar / 2.0);
    for (double t : {0.7, 5.0, 20.0 * std::abs(u(rng))}) {
      const PrecessionUnitary m = particle_unitary(f, p, t);
      unit = std::max(unit, std::abs(std::norm(m.alpha) + std::norm(m.beta) - 1.0));
      ode = std::max(ode, (polarization_transported(m, up, down) -
                           precess_polarization_ode(f, p, s0, t)).norm());
    }
    for (int k = 0; k < 50; ++k) {
      const PrecessionUnitary m = particle_unitary(f, p, 100.0 * u(rng));
      unit = std::max(unit, std::abs(std::norm(m.alpha) + std::norm(m.beta) - 1.0));
    }
  }
  return {{"ODE vs M conjugation", ode, 1e-7}, {"|alpha|^2 + |beta|^2 = 1", unit, 1e-12}};
}

std::vector<Part> wigner_rotation() {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> s(0.0, 0.95);
  auto velocity = [&] { return Vec3(g(rng), g(rng), g(rng)).normalized() * s(rng); };
  double angle = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Vec3 v = velocity();
    const Vec3 w = velocity();
    const WignerRotation r = wigner(FourVelocity::from_velocity(v), FourVelocity::from_velocity(w));
    angle = std::max(angle, (r.delta * r.axis - oracle::wigner_rotation_vector(v, w)).norm());
  }
  double collinear = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Vec3 v = velocity();
    const Vec3 w = v.normalized() * (2.0 * s(rng) - 0.95);
    collinear = std::max(collinear, wigner(FourVelocity::from_velocity(v), FourVelocity::from_velocity(w)).delta);
  }

  // E = 0: the frame map must leave the magnetic evolution untouched bit for bit.
  Scenario pure = general_scenario(WSpec{WPhase::plus});
  pure.field.e_direction = pure.field.b_direction.unitOrthogonal();
  double identity = 0.0;
  const ThreeQubitState initial = make_initial_state(pure.state);
  for (double t : pure.grid.values()) {
    std::array<PrecessionUnitary, 3> m;
    for (std::size_t p = 0; p < 3; ++p) m[p] = particle_unitary(pure.magnetic(), pure.particles[p], t);
    if (state_at(pure, initial, t).amplitudes() != evolve(initial, m[0], m[1], m[2]).amplitudes()) identity = 1.0;
  }
  const double b_prime = std::abs(frame_map_scenario({0.6, 1.0}, default_particles()).primed_field.magnitude - 0.8);
  return {{"delta vs boost composition, 1000 pairs", angle, 1e-9},
          {"collinear delta = 0", collinear, 0.0},
          {"E = 0 frame map bit-for-bit", identity, 0.0},
          {"B' = 0.8 for B = 1, E = 0.6", b_prime, 1e-15}};
}

std::vector<Part> crossed_fields() {
  std::mt19937_64 rng(5);
  Amplitudes random{};
  const Vec8c v = oracle::random_state(rng);
  for (int n = 0; n < 8; ++n) random[static_cast<std::size_t>(n)] = v(n);
  double drift = 0.0;
  double norm = 0.0;
  for (const InitialStateSpec& state : {InitialStateSpec{GhzSpec{1}}, InitialStateSpec{WSpec{WPhase::minus}},
                                         InitialStateSpec{CustomSpec{random}}}) {
    Scenario s;
    s.field = {0.6, 1.0, Vec3::UnitZ(), Vec3::UnitX()};
    s.particles = default_particles();
    s.particles[1].direction = Vec3(0.5, 0.5, std::sqrt(0.5));
    s.particles[2].speed = 0.9;
    s.state = state;
    s.grid = {GridKind::time, 0.0, 80.0, 400};
    const auto samples = time_series(s);
    const TangleReport& t0 = *samples.front().tangles;
    for (const Sample& x : samples) {
      const TangleReport& t = *x.tangles;
      drift = std::max({drift, std::abs(t.tau123 - t0.tau123), std::abs(t.tau12 - t0.tau12),
                        std::abs(t.tau23 - t0.tau23), std::abs(t.tau31 - t0.tau31)});
      double total = 0.0;
      for (double p : x.probabilities) total += p;
      norm = std::max(norm, std::abs(total - 1.0));
    }
  }
  return {{"tangle drift", drift, 1e-9}, {"|sum P - 1|", norm, 1e-12}};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Criterion>> criteria{
      {"GHZ probabilities", ghz_probabilities},
      {"W probabilities, phi = 0", w_zero},
      {"W probabilities, phi = +-2pi/3", w_third_turn},
      {"tangle golden values", tangle_values},
      {"spectral vs polynomial tangle, partial trace", tangle_routes},
      {"coupled angular momentum catalog", catalog_table},
      {"precession oracle", precession_oracle},
      {"Wigner rotation and frame map", wigner_rotation},
      {"crossed-field end-to-end run", crossed_fields},
  };
  int failures = 0;
  int id = 0;
  for (const auto& [name, criterion] : criteria) {
    ++id;
    std::vector<Part> parts;
    std::string error;
    try {
      parts = criterion();
    } catch (const std::exception& e) {
      error = e.what();
    }
    bool ok = error.empty();
    for (const Part& p : parts) ok = ok && p.passed();
    if (!ok) ++failures;
    std::printf("%s %d %s", ok ? "PASS" : "FAIL", id, name);
    for (const Part& p : parts)
      std::printf(" | %s: %.3g (tol %.0e)%s", p.label.c_str(), p.error, p.tolerance, p.passed() ? "" : " !");
    if (!error.empty()) std::printf(" | exception: %s", error.c_str());
    std::printf("\n");
  }
  std::printf("%d/%d criteria passed\n", id - failures, id);
  return failures == 0 ? 0 : 1;
}
