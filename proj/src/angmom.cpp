#include "spin3/angmom.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace spin3 {

namespace {

std::array<Mat2c, 3> half_pauli() {
  Mat2c sx, sy, sz;
  sx << 0.0, 1.0, 1.0, 0.0;
  sy << 0.0, -kI, kI, 0.0;
  sz << 1.0, 0.0, 0.0, -1.0;
  return {0.5 * sx, 0.5 * sy, 0.5 * sz};
}

// op acting on site `site` (0-based), identity elsewhere.
Mat8c embed(const Mat2c& op, int site) {
  Mat8c out = Mat8c::Zero();
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      bool spectators_match = true;
      for (int p = 0; p < 3; ++p) {
        if (p != site && spin_of(r, p) != spin_of(c, p)) spectators_match = false;
      }
      if (spectators_match) {
        out(r, c) = op(static_cast<int>(spin_of(r, site)), static_cast<int>(spin_of(c, site)));
      }
    }
  }
  return out;
}

AngularOperators build_operators() {
  const auto s = half_pauli();
  std::array<std::array<Mat8c, 3>, 3> j;  // j[site][component]
  for (int site = 0; site < 3; ++site) {
    for (int a = 0; a < 3; ++a) j[site][a] = embed(s[a], site);
  }

  AngularOperators ops;
  Mat8c total[3];
  for (int a = 0; a < 3; ++a) total[a] = j[0][a] + j[1][a] + j[2][a];
  ops.j2 = total[0] * total[0] + total[1] * total[1] + total[2] * total[2];
  ops.jz = total[2];

  // (J1 x J2) . J3 = eps_abc J1_a J2_b J3_c
  ops.z = Mat8c::Zero();
  static constexpr int kCyclic[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  for (const auto& abc : kCyclic) {
    const int a = abc[0], b = abc[1], c = abc[2];
    ops.z += j[0][a] * j[1][b] * j[2][c];
    ops.z -= j[0][a] * j[1][c] * j[2][b];
  }
  return ops;
}

ThreeQubitState triplet(const char* l0, cd c0, const char* l1, cd c1, const char* l2, cd c2) {
  Amplitudes a{};
  const double r = 1.0 / std::sqrt(3.0);
  a[static_cast<std::size_t>(BasisLabel::parse(l0).index())] = r * c0;
  a[static_cast<std::size_t>(BasisLabel::parse(l1).index())] = r * c1;
  a[static_cast<std::size_t>(BasisLabel::parse(l2).index())] = r * c2;
  return ThreeQubitState(a);
}

std::array<CatalogEntry, 8> build_catalog() {
  const double zeta = std::sqrt(3.0) / 4.0;
  const cd w = std::exp(kI * (2.0 * kPi / 3.0));
  const cd wbar = std::conj(w);
  auto basis = [](const char* l) { return ThreeQubitState::basis(BasisLabel::parse(l)); };
  // Amplitudes follow the standard coupled-state table. The m = -1/2 doublet
  // rows carry the zeta that Z actually assigns to them: the phase pattern
  // (e^{-i2pi/3}|1bb> + e^{+i2pi/3}|b1b> + |bb1>) has zeta = -sqrt(3)/4.
  return {{
      {{1.5, 1.5, 0.0}, basis("111")},
      {{1.5, -1.5, 0.0}, basis("bbb")},
      {{1.5, 0.5, 0.0}, triplet("b11", 1.0, "1b1", 1.0, "11b", 1.0)},
      {{1.5, -0.5, 0.0}, triplet("1bb", 1.0, "b1b", 1.0, "bb1", 1.0)},
      {{0.5, 0.5, zeta}, triplet("b11", w, "1b1", wbar, "11b", 1.0)},
      {{0.5, 0.5, -zeta}, triplet("b11", wbar, "1b1", w, "11b", 1.0)},
      {{0.5, -0.5, zeta}, triplet("1bb", w, "b1b", wbar, "bb1", 1.0)},
      {{0.5, -0.5, -zeta}, triplet("1bb", wbar, "b1b", w, "bb1", 1.0)},
  }};
}

}  // namespace

const AngularOperators& angular_operators() {
  static const AngularOperators ops = build_operators();
  return ops;
}

std::string ZEigenLabel::str() const {
  auto half = [](double x) {
    std::ostringstream os;
    const int twice = static_cast<int>(std::lround(2.0 * x));
    os << twice << "/2";
    return os.str();
  };
  std::ostringstream os;
  os << "|" << half(j) << ", " << half(m) << ", ";
  if (zeta == 0.0) {
    os << "0";
  } else {
    os << (zeta > 0 ? "+" : "-") << "sqrt3/4";
  }
  os << ">";
  return os.str();
}

const std::array<CatalogEntry, 8>& catalog() {
  static const std::array<CatalogEntry, 8> entries = build_catalog();
  return entries;
}

Classification classify(const ThreeQubitState& state, double tie_tolerance) {
  Classification out;
  const auto& rows = catalog();
  double best = -1.0;
  for (std::size_t n = 0; n < rows.size(); ++n) {
    out.coefficients[n] = inner(rows[n].state, state);
    const double weight = std::norm(out.coefficients[n]);
    if (weight > best) {
      best = weight;
      out.dominant = n;
    }
  }
  for (std::size_t n = 0; n < rows.size(); ++n) {
    if (n != out.dominant && std::abs(std::norm(out.coefficients[n]) - best) <= tie_tolerance) {
      out.ambiguous = true;
    }
  }
  return out;
}

Mat8c permutation_matrix(const Permutation& perm) {
  Mat8c p = Mat8c::Zero();
  for (int col = 0; col < 8; ++col) {
    int row = 0;
    for (int particle = 0; particle < 3; ++particle) {
      const int bit = static_cast<int>(spin_of(col, particle));
      row |= bit << (2 - perm[static_cast<std::size_t>(particle)]);
    }
    p(row, col) = 1.0;
  }
  return p;
}

ThreeQubitState permutation_action(const Permutation& perm, const ThreeQubitState& state) {
  Permutation sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != Permutation{0, 1, 2}) throw DomainError("not a permutation of (0, 1, 2)");
  return ThreeQubitState(Vec8c(permutation_matrix(perm) * state.vector()));
}

int permutation_sign(const Permutation& perm) {
  int inversions = 0;
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

int check_z_parity(const Permutation& perm, double tolerance) {
  const Mat8c& z = angular_operators().z;
  const Mat8c p = permutation_matrix(perm);
  const Mat8c conjugated = p.adjoint() * z * p;
  const int sign = permutation_sign(perm);
  const double residual = (conjugated - static_cast<double>(sign) * z).cwiseAbs().maxCoeff();
  if (residual > tolerance) {
    throw NumericalError("P^dagger Z P != sign * Z (residual " + std::to_string(residual) + ")");
  }
  return sign;
}

}  // namespace spin3
