#include "spin3/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "spin3/angmom.hpp"
#include "spin3/emboost.hpp"
#include "spin3/entanglement.hpp"
#include "spin3/evolution.hpp"
#include "spin3/precession.hpp"

namespace spin3 {

namespace {

using Check = std::function<double()>;

struct Registry {
  const VerifyOptions& options;
  VerifyReport report;

  void add(const char* section, const char* name, double tolerance, const Check& check) {
    if (options.section && *options.section != section) return;
    CheckResult r{section, name, 0.0, tolerance, false};
    try {
      r.error = check();
      r.passed = std::isfinite(r.error) && r.error <= tolerance;
    } catch (const std::exception&) {
      r.error = std::numeric_limits<double>::infinity();
    }
    report.checks.push_back(r);
  }
};

double max_abs_diff(const Probabilities& a, const Probabilities& b) {
  double worst = 0.0;
  for (std::size_t n = 0; n < 8; ++n) worst = std::max(worst, std::abs(a[n] - b[n]));
  return worst;
}

// exp(-i angle/2 n.sigma) through the eigen-decomposition of n.sigma.
Mat2c spectral_exponential(const Vec3& n, double angle) {
  Mat2c h;
  h << n.z(), cd(n.x(), -n.y()), cd(n.x(), n.y()), -n.z();
  const Eigen::SelfAdjointEigenSolver<Mat2c> es(h);
  Mat2c d = Mat2c::Zero();
  for (int k = 0; k < 2; ++k) d(k, k) = std::exp(-kI * (angle / 2.0) * es.eigenvalues()(k));
  return es.eigenvectors() * d * es.eigenvectors().adjoint();
}

ThreeQubitState basis_sum(std::initializer_list<std::pair<const char*, cd>> terms) {
  Amplitudes a{};
  for (const auto& [label, c] : terms) a[static_cast<std::size_t>(BasisLabel::parse(label).index())] = c;
  return ThreeQubitState::normalized(a);
}

void precession_checks(Registry& reg) {
  reg.add("precession", "unitarity of precession parameters, random kinematics", 1e-12, [] {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      const FieldConfig f{0.5 + std::abs(u(rng)), Vec3(u(rng), u(rng), u(rng)).normalized()};
      ParticleKinematics p{1.0 + std::abs(u(rng)), u(rng), 0.3 * u(rng), 0.95 * std::abs(u(rng)),
                           Vec3(u(rng), u(rng), u(rng)).normalized()};
      const PrecessionUnitary m = particle_unitary(f, p, 10.0 * u(rng));
      worst = std::max(worst, std::abs(std::norm(m.alpha) + std::norm(m.beta) - 1.0));
    }
    return worst;
  });

  reg.add("precession", "closed-form parameters equal the two-exponential product", 1e-12, [] {
    PrecessionRates r;
    r.omega = 1.3;
    r.Omega = 0.41;
    r.Omega1 = 0.41 * 0.8;
    r.Omega3 = 0.41 * 0.6;
    const Vec3 b(0.6, 0.0, 0.8);
    const double t = 0.37;
    const Mat2c expected = spectral_exponential(r.axis(), r.Omega * t) * spectral_exponential(b, r.omega * t);
    return (unitary(r, b, t).matrix() - expected).cwiseAbs().maxCoeff();
  });

  reg.add("precession", "polarization ODE matches M-transported spin (B.v != 0)", 1e-7, [] {
    const FieldConfig f{1.0, Vec3(1.0, 0.0, 0.0)};
    const ParticleKinematics p{1.0, 1.0, 0.4, 0.8, Vec3(0.6, 0.8, 0.0)};
    const cd up = std::polar(std::cos(0.4), 0.0);
    const cd down = std::polar(std::sin(0.4), 0.9);
    double worst = 0.0;
    for (double t : {0.3, 1.7, 4.2}) {
      const Vec3 ode = precess_polarization_ode(f, p, polarization(up, down), t);
      const Vec3 via_m = polarization_transported(particle_unitary(f, p, t), up, down);
      worst = std::max(worst, (ode - via_m).norm());
    }
    return worst;
  });

  reg.add("precession", "special-configuration period 4pi/(omega+Omega)", 1e-10, [] {
    const FieldConfig f{1.0, Vec3::UnitX()};
    const ParticleKinematics p{1.0, 1.0, 0.00116, 0.6, Vec3::UnitY()};
    const double period = special_period(rates(f, p));
    const double t = 0.77;
    return (particle_unitary(f, p, t + period).matrix() - particle_unitary(f, p, t).matrix())
        .cwiseAbs()
        .maxCoeff();
  });
}

void closed_form_checks(Registry& reg, double shift) {
  auto pipeline = [shift](const ThreeQubitState& s, double theta) {
    const PrecessionUnitary u = special_unitary(theta + shift);
    return probabilities(evolve(s, u, u, u));
  };

  reg.add("probabilities", "GHZ numeric vs closed form, 512 points", 1e-10, [&] {
    double worst = 0.0;
    for (int eps : {1, -1}) {
      for (int n = 0; n < 512; ++n) {
        const double theta = kPi * n / 511.0;
        worst = std::max(worst, max_abs_diff(pipeline(ghz_state(eps), theta), ghz_closed_form(eps, theta)));
      }
    }
    return worst;
  });

  reg.add("probabilities", "GHZ at theta = pi/4 is uniform 1/8", 1e-12, [&] {
    Probabilities eighth;
    eighth.fill(0.125);
    return max_abs_diff(pipeline(ghz_state(1), kPi / 4.0), eighth);
  });

  reg.add("probabilities", "W numeric vs closed form, all phases, 512 points", 1e-10, [&] {
    double worst = 0.0;
    for (WPhase ph : {WPhase::zero, WPhase::plus, WPhase::minus}) {
      for (int n = 0; n < 512; ++n) {
        const double theta = kPi * n / 511.0;
        worst = std::max(worst, max_abs_diff(pipeline(w_state(ph), theta), w_closed_form(ph, theta)));
      }
    }
    return worst;
  });

  reg.add("probabilities", "W(0) extrema at alpha^2 = 2/3 and 1/3", 1e-12, [&] {
    const double theta_a = std::acos(std::sqrt(2.0 / 3.0));
    const double theta_b = std::acos(std::sqrt(1.0 / 3.0));
    const Probabilities pa = pipeline(w_state(WPhase::zero), theta_a);
    const Probabilities pb = pipeline(w_state(WPhase::zero), theta_b);
    // index order: 111 11b 1b1 1bb b11 b1b bb1 bbb
    const Probabilities ea{4.0 / 9, 0, 0, 1.0 / 9, 0, 1.0 / 9, 1.0 / 9, 2.0 / 9};
    const Probabilities eb{2.0 / 9, 1.0 / 9, 1.0 / 9, 0, 1.0 / 9, 0, 0, 4.0 / 9};
    return std::max(max_abs_diff(pa, ea), max_abs_diff(pb, eb));
  });

  reg.add("probabilities", "W(+-2pi/3) never reaches |111> or |bbb>", 1e-12, [&] {
    double worst = 0.0;
    for (WPhase ph : {WPhase::plus, WPhase::minus}) {
      for (int n = 0; n < 512; ++n) {
        const Probabilities p = pipeline(w_state(ph), kPi * n / 511.0);
        worst = std::max({worst, p[0], p[7]});
      }
    }
    return worst;
  });
}

void tangle_checks(Registry& reg) {
  reg.add("tangles", "GHZ 3-tangle is 1 (both routes)", 1e-12, [] {
    const ThreeQubitState g = ghz_state(1);
    return std::max(std::abs(tangle3_spectral(g) - 1.0), std::abs(tangle3_polynomial(g) - 1.0));
  });

  reg.add("tangles", "GHZ quarter-period state: d-terms (4,6,-2)/64 and tangle 1", 1e-12, [] {
    const double a = 1.0 / (2.0 * std::sqrt(2.0));
    const ThreeQubitState s = basis_sum({{"111", a}, {"bbb", a}, {"1bb", -a}, {"b1b", -a},
                                         {"bb1", -a}, {"b11", -a}, {"1b1", -a}, {"11b", -a}});
    const HyperdeterminantTerms d = hyperdeterminant_terms(split(s, 3));
    const double err = std::max({std::abs(d.d1 - 4.0 / 64), std::abs(d.d2 - 6.0 / 64),
                                 std::abs(d.d3 + 2.0 / 64)});
    return std::max(err, std::abs(tangle3_polynomial(s) - 1.0));
  });

  reg.add("tangles", "all-plus uniform superposition has zero 3-tangle", 1e-10, [] {
    Amplitudes a;
    a.fill(1.0 / (2.0 * std::sqrt(2.0)));
    const ThreeQubitState s(a);
    return std::max(tangle3_polynomial(s), tangle3_spectral(s));
  });

  reg.add("tangles", "W states: zero 3-tangle and pair tangles 4/9", 1e-9, [] {
    double worst = 0.0;
    for (WPhase ph : {WPhase::zero, WPhase::plus, WPhase::minus}) {
      for (double theta : {0.0, 0.3, 1.1, 2.0}) {
        const PrecessionUnitary u = special_unitary(theta);
        const TangleReport t = tangles(evolve(w_state(ph), u, u, u));
        worst = std::max({worst, t.tau123, std::abs(t.tau12 - 4.0 / 9), std::abs(t.tau23 - 4.0 / 9),
                          std::abs(t.tau31 - 4.0 / 9)});
      }
    }
    return worst;
  });
}

void boost_checks(Registry& reg) {
  reg.add("frames", "reduced field B' = sqrt(B^2 - E^2) for B = 1, E = 0.6", 1e-15, [] {
    const EMField f{0.6, 1.0, Vec3::UnitZ(), Vec3::UnitX()};
    const ReducingBoost r = reducing_boost(f);
    return std::max(std::abs(r.b_prime - 0.8), std::abs(r.boost.u0 - 1.25));
  });

  reg.add("frames", "Wigner angle matches boost-composition rotation", 1e-9, [] {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const Vec3 v1 = Vec3(u(rng), u(rng), u(rng)).normalized() * 0.9 * std::abs(u(rng));
      const Vec3 v2 = Vec3(u(rng), u(rng), u(rng)).normalized() * 0.9 * std::abs(u(rng));
      const FourVelocity a = FourVelocity::from_velocity(v1);
      const FourVelocity b = FourVelocity::from_velocity(v2);
      const Eigen::Matrix4d r =
          boost_matrix(boost(b, a)).inverse() * boost_matrix(b) * boost_matrix(a);
      const Eigen::Matrix3d rot = r.block<3, 3>(1, 1);
      const Vec3 skew(rot(2, 1) - rot(1, 2), rot(0, 2) - rot(2, 0), rot(1, 0) - rot(0, 1));
      const double angle = std::atan2(skew.norm() / 2.0, (rot.trace() - 1.0) / 2.0);
      worst = std::max(worst, std::abs(wigner(a, b).delta - angle));
    }
    return worst;
  });

  reg.add("frames", "collinear boosts leave spins alone", 0.0, [] {
    const FourVelocity a = FourVelocity::from_velocity(Vec3(0.3, 0.0, 0.0));
    const FourVelocity b = FourVelocity::from_velocity(Vec3(0.7, 0.0, 0.0));
    return wigner(a, b).delta;
  });
}

void catalog_checks(Registry& reg) {
  reg.add("angmom", "catalog rows are eigenvectors of J^2, J_z and Z", 1e-12, [] {
    const AngularOperators& ops = angular_operators();
    double worst = 0.0;
    for (const CatalogEntry& e : catalog()) {
      const Vec8c v = e.state.vector();
      const double j2 = e.label.j * (e.label.j + 1.0);
      worst = std::max(worst, (ops.j2 * v - j2 * v).cwiseAbs().maxCoeff());
      worst = std::max(worst, (ops.jz * v - e.label.m * v).cwiseAbs().maxCoeff());
      worst = std::max(worst, (ops.z * v - e.label.zeta * v).cwiseAbs().maxCoeff());
    }
    return worst;
  });

  reg.add("angmom", "Z odd under transpositions, even under cycles", 1e-12, [] {
    double worst = 0.0;
    for (const Permutation& p : {Permutation{1, 0, 2}, Permutation{0, 2, 1}, Permutation{2, 1, 0},
                                 Permutation{1, 2, 0}, Permutation{2, 0, 1}}) {
      const Mat8c& z = angular_operators().z;
      const Mat8c m = permutation_matrix(p);
      const double sign = permutation_sign(p);
      worst = std::max(worst, (m.adjoint() * z * m - sign * z).cwiseAbs().maxCoeff());
    }
    return worst;
  });

  reg.add("angmom", "GHZ splits evenly over the |m| = 3/2 rows", 1e-15, [] {
    const Classification c = classify(ghz_state(1));
    const double h = 1.0 / std::sqrt(2.0);
    double worst = std::max(std::abs(c.coefficients[0] - h), std::abs(c.coefficients[1] - h));
    for (std::size_t n = 2; n < 8; ++n) worst = std::max(worst, std::abs(c.coefficients[n]));
    return worst;
  });
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerifyReport verify(const VerifyOptions& options) {
  static const char* kSections[] = {"precession", "probabilities", "tangles", "frames", "angmom"};
  if (options.section &&
      std::find(std::begin(kSections), std::end(kSections), *options.section) == std::end(kSections)) {
    throw std::invalid_argument("unknown section '" + *options.section + "' (use precession, probabilities, tangles, frames or angmom)");
  }
  Registry reg{options, {}};
  precession_checks(reg);
  closed_form_checks(reg, options.mutate ? 1e-6 : 0.0);
  tangle_checks(reg);
  boost_checks(reg);
  catalog_checks(reg);
  return reg.report;
}

void write_report(std::ostream& out, const VerifyReport& report) {
  for (const CheckResult& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << std::left << std::setw(14) << c.section << c.name
        << "  (error " << std::scientific << std::setprecision(2) << c.error << ", tol "
        << c.tolerance << ")\n"
        << std::defaultfloat;
  }
  const auto failed = std::count_if(report.checks.begin(), report.checks.end(),
                                    [](const CheckResult& c) { return !c.passed; });
  out << report.checks.size() - static_cast<std::size_t>(failed) << "/" << report.checks.size()
      << " checks passed\n";
}

}  // namespace spin3
