#include "spin3/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace spin3 {

namespace {

// Particle indices (0-based) of the remaining pair for a traced particle.
std::array<int, 2> pair_slots(int traced) {
  switch (traced) {
    case 3:
      return {0, 1};
    case 1:
      return {1, 2};
    case 2:
      return {2, 0};
    default:
      throw DomainError("traced particle must be 1, 2 or 3, got " + std::to_string(traced));
  }
}

int compose_index(int a_slot, int a_bit, int b_slot, int b_bit, int t_slot, int t_bit) {
  int n = 0;
  n |= a_bit << (2 - a_slot);
  n |= b_bit << (2 - b_slot);
  n |= t_bit << (2 - t_slot);
  return n;
}

Mat2c sigma_y() {
  Mat2c s;
  s << 0.0, -kI, kI, 0.0;
  return s;
}

}  // namespace

int traced_particle(Pair pair) {
  switch (pair) {
    case Pair::p12:
      return 3;
    case Pair::p23:
      return 1;
    case Pair::p31:
      return 2;
  }
  return 3;
}

Pair remaining_pair(int traced) {
  switch (traced) {
    case 3:
      return Pair::p12;
    case 1:
      return Pair::p23;
    case 2:
      return Pair::p31;
    default:
      throw DomainError("traced particle must be 1, 2 or 3, got " + std::to_string(traced));
  }
}

SplitCoefficients split(const ThreeQubitState& state, int traced) {
  const auto [a, b] = pair_slots(traced);
  const int t = traced - 1;
  SplitCoefficients s;
  for (int n = 0; n < 4; ++n) {
    const int hi = n >> 1;
    const int lo = n & 1;
    s.f[static_cast<std::size_t>(n)] = state[compose_index(a, hi, b, lo, t, 0)];
    // g_n pairs with pair basis index 3 - n, i.e. both bits flipped.
    s.g[static_cast<std::size_t>(n)] = state[compose_index(a, 1 - hi, b, 1 - lo, t, 1)];
  }
  return s;
}

TwoQubitDensity::TwoQubitDensity(const Mat4c& rho) : rho_(rho) {
  if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw NumericalError("reduced density matrix is not Hermitian");
  }
  if (std::abs(rho_.trace() - 1.0) > 1e-12) {
    throw NumericalError("reduced density matrix does not have unit trace");
  }
  const Eigen::SelfAdjointEigenSolver<Mat4c> solver(rho_, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("density eigen-solver failed");
  if (solver.eigenvalues().minCoeff() < -1e-10) {
    throw NumericalError("reduced density matrix has a negative eigenvalue");
  }
}

TwoQubitDensity reduce(const ThreeQubitState& state, int traced) {
  const SplitCoefficients s = split(state, traced);
  // a_pq = f_p f_q^* + g_{3-p} g_{3-q}^*
  Mat4c rho;
  for (int p = 0; p < 4; ++p) {
    for (int q = 0; q < 4; ++q) {
      const auto up = static_cast<std::size_t>(p);
      const auto uq = static_cast<std::size_t>(q);
      rho(p, q) = s.f[up] * std::conj(s.f[uq]) + s.g[3 - up] * std::conj(s.g[3 - uq]);
    }
  }
  return TwoQubitDensity(rho);
}

Mat4c spin_flip(const Mat4c& rho) {
  const Mat2c sy = sigma_y();
  Mat4c yy;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) yy(r, c) = sy(r >> 1, c >> 1) * sy(r & 1, c & 1);
  }
  return yy * rho.conjugate() * yy;
}

std::array<double, 4> flip_spectrum(const Mat4c& rho) {
  const Mat4c product = rho * spin_flip(rho);
  const Eigen::ComplexEigenSolver<Mat4c> solver(product, false);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigen-solver failed on rho * rho-tilde");
  }
  std::array<double, 4> mu{};
  for (int n = 0; n < 4; ++n) {
    const double re = solver.eigenvalues()(n).real();
    if (re < -1e-8) {
      throw NumericalError("rho * rho-tilde has eigenvalue " + std::to_string(re) +
                           " below -1e-8");
    }
    mu[static_cast<std::size_t>(n)] = std::max(re, 0.0);
  }
  std::sort(mu.begin(), mu.end(), std::greater<>());
  return mu;
}

std::array<Eigen::Vector4cd, 2> pair_ensemble(const ThreeQubitState& state, int traced) {
  const SplitCoefficients s = split(state, traced);
  std::array<Eigen::Vector4cd, 2> v;
  v[0] << s.f[0], s.f[1], s.f[2], s.f[3];
  v[1] << s.g[3], s.g[2], s.g[1], s.g[0];
  return v;
}

std::array<double, 2> flip_roots(const std::array<Eigen::Vector4cd, 2>& ensemble) {
  const Mat2c sy = sigma_y();
  Mat4c yy;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) yy(r, c) = sy(r >> 1, c >> 1) * sy(r & 1, c & 1);
  }
  Mat2c t;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const auto ui = static_cast<std::size_t>(i);
      const auto uj = static_cast<std::size_t>(j);
      t(i, j) = ensemble[ui].dot(yy * ensemble[uj].conjugate());
    }
  }
  const Eigen::JacobiSVD<Mat2c> svd(t);
  const auto& sv = svd.singularValues();
  return {std::max(sv(0), sv(1)), std::min(sv(0), sv(1))};
}

double tangle3_spectral(const ThreeQubitState& state) {
  // Pure three-qubit states leave a rank <= 2 pair, so rho * rho-tilde has
  // at most two nonzero eigenvalues lambda1^2, lambda2^2.
  const std::array<double, 2> lambda = flip_roots(pair_ensemble(state, 3));
  return 4.0 * lambda[0] * lambda[1];
}

HyperdeterminantTerms hyperdeterminant_terms(const SplitCoefficients& s) {
  const auto& f = s.f;
  const auto& g = s.g;
  const cd p0 = f[0] * g[0];
  const cd p1 = f[1] * g[1];
  const cd p2 = f[2] * g[2];
  const cd p3 = f[3] * g[3];
  HyperdeterminantTerms d;
  d.d1 = p0 * p0 + p1 * p1 + p2 * p2 + p3 * p3;
  d.d2 = p0 * (p1 + p2 + p3) + (p1 * p2 + p2 * p3 + p3 * p1);
  d.d3 = f[0] * f[3] * g[1] * g[2] + f[1] * f[2] * g[0] * g[3];
  return d;
}

double tangle3_polynomial(const ThreeQubitState& state) {
  const HyperdeterminantTerms d = hyperdeterminant_terms(split(state, 3));
  return 4.0 * std::abs(d.d1 - 2.0 * d.d2 + 4.0 * d.d3);
}

double concurrence_squared(const Mat4c& rho) {
  const std::array<double, 4> mu = flip_spectrum(rho);
  const double c = std::sqrt(mu[0]) - std::sqrt(mu[1]) - std::sqrt(mu[2]) - std::sqrt(mu[3]);
  return c > 0.0 ? c * c : 0.0;
}

double tangle2(const ThreeQubitState& state, Pair pair) {
  const std::array<double, 2> lambda = flip_roots(pair_ensemble(state, traced_particle(pair)));
  const double c = lambda[0] - lambda[1];
  return c * c;
}

TangleReport tangles(const ThreeQubitState& state) {
  return {tangle3_spectral(state), tangle2(state, Pair::p12), tangle2(state, Pair::p23),
          tangle2(state, Pair::p31)};
}

}  // namespace spin3
