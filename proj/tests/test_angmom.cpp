#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "spin3/angmom.hpp"
#include "spin3/evolution.hpp"

using namespace spin3;

namespace {

struct Operators {
  std::array<std::array<Mat8c, 3>, 3> j;  // j[site][component]
  std::array<Mat8c, 3> total;
  Mat8c j2;
  Mat8c z;
};

Operators kron_operators() {
  Operators o;
  for (int site = 0; site < 3; ++site)
    for (int a = 0; a < 3; ++a)
      o.j[static_cast<std::size_t>(site)][static_cast<std::size_t>(a)] =
          oracle::embed(0.5 * oracle::sigma(a), site);
  o.j2 = Mat8c::Zero();
  for (std::size_t a = 0; a < 3; ++a) {
    o.total[a] = o.j[0][a] + o.j[1][a] + o.j[2][a];
    o.j2 += o.total[a] * o.total[a];
  }
  // Levi-Civita contraction written out term by term.
  auto t = [&](int a, int b, int c) {
    return Mat8c(o.j[0][static_cast<std::size_t>(a)] * o.j[1][static_cast<std::size_t>(b)] *
                 o.j[2][static_cast<std::size_t>(c)]);
  };
  o.z = t(0, 1, 2) + t(1, 2, 0) + t(2, 0, 1) - t(0, 2, 1) - t(2, 1, 0) - t(1, 0, 2);
  return o;
}

const std::array<Permutation, 6> kPermutations{
    {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}}};

}  // namespace

TEST_CASE("operators agree with the Kronecker construction") {
  const Operators o = kron_operators();
  const AngularOperators& ops = angular_operators();
  CHECK(oracle::max_abs(ops.j2 - o.j2) < 1e-15);
  CHECK(oracle::max_abs(ops.jz - o.total[2]) < 1e-15);
  CHECK(oracle::max_abs(ops.z - o.z) < 1e-15);
  CHECK(oracle::max_abs(o.z - o.z.adjoint()) < 1e-15);
  // Z is a scalar under global rotations.
  for (const Mat8c& component : o.total)
    CHECK(oracle::max_abs(o.z * component - component * o.z) < 1e-15);
}

TEST_CASE("Z spectrum is four zeros and a doubled pair of +-sqrt(3)/4") {
  const Eigen::SelfAdjointEigenSolver<Mat8c> es(kron_operators().z);
  std::array<double, 8> ev{};
  for (int n = 0; n < 8; ++n) ev[static_cast<std::size_t>(n)] = es.eigenvalues()(n);
  std::sort(ev.begin(), ev.end());
  const double z = std::sqrt(3.0) / 4.0;
  const std::array<double, 8> expected{-z, -z, 0, 0, 0, 0, z, z};
  for (std::size_t n = 0; n < 8; ++n) CHECK(std::abs(ev[n] - expected[n]) < 1e-14);
}

TEST_CASE("catalog rows are orthonormal simultaneous eigenvectors") {
  const Operators o = kron_operators();
  const auto& rows = catalog();
  for (std::size_t a = 0; a < rows.size(); ++a) {
    const Vec8c v = rows[a].state.vector();
    const ZEigenLabel& l = rows[a].label;
    CHECK(oracle::max_abs(o.j2 * v - l.j * (l.j + 1.0) * v) < 1e-12);
    CHECK(oracle::max_abs(o.total[2] * v - l.m * v) < 1e-12);
    CHECK(oracle::max_abs(o.z * v - l.zeta * v) < 1e-12);
    for (std::size_t b = 0; b < rows.size(); ++b) {
      const cd overlap = v.dot(rows[b].state.vector());
      CHECK(std::abs(overlap - (a == b ? 1.0 : 0.0)) < 1e-15);
    }
  }
}

TEST_CASE("permutation matrix moves particle p to slot perm[p]") {
  for (const Permutation& perm : kPermutations) {
    const Mat8c p = permutation_matrix(perm);
    for (int n = 0; n < 8; ++n) {
      std::array<int, 3> moved{};
      for (std::size_t q = 0; q < 3; ++q)
        moved[static_cast<std::size_t>(perm[q])] = (n >> (2 - static_cast<int>(q))) & 1;
      const int target = 4 * moved[0] + 2 * moved[1] + moved[2];
      for (int r = 0; r < 8; ++r) CHECK(p(r, n) == cd(r == target ? 1.0 : 0.0));
    }
  }
  CHECK_THROWS_AS(permutation_action({0, 0, 1}, ghz_state(1)), DomainError);
}

TEST_CASE("Z flips sign under transpositions and is invariant under cycles") {
  const Mat8c z = kron_operators().z;
  for (const Permutation& perm : kPermutations) {
    const Mat8c p = permutation_matrix(perm);
    const bool is_cycle = perm == Permutation{0, 1, 2} || perm == Permutation{1, 2, 0} ||
                          perm == Permutation{2, 0, 1};
    const double sign = is_cycle ? 1.0 : -1.0;
    CHECK(permutation_sign(perm) == static_cast<int>(sign));
    CHECK(oracle::max_abs(p.adjoint() * z * p - sign * z) < 1e-15);
    CHECK(check_z_parity(perm) == static_cast<int>(sign));
  }
}

TEST_CASE("GHZ splits evenly over the stretched states") {
  const double h = 1.0 / std::sqrt(2.0);
  for (int eps : {1, -1}) {
    const Classification c = classify(ghz_state(eps));
    CHECK(c.coefficients[0] == cd(h));
    CHECK(c.coefficients[1] == cd(eps * h));
    for (std::size_t n = 2; n < 8; ++n) CHECK(c.coefficients[n] == cd(0.0));
    CHECK(c.ambiguous);
  }
}

TEST_CASE("W phases select single catalog rows") {
  const auto& rows = catalog();
  const Mat8c z = kron_operators().z;
  for (WPhase phase : {WPhase::zero, WPhase::plus, WPhase::minus}) {
    for (const ThreeQubitState& w : {w_state(phase), wflip_state(phase)}) {
      // Brute force: find the row with unit overlap.
      std::size_t hit = rows.size();
      for (std::size_t n = 0; n < rows.size(); ++n)
        if (std::abs(std::abs(rows[n].state.vector().dot(w.vector())) - 1.0) < 1e-14) hit = n;
      REQUIRE(hit < rows.size());
      const Classification c = classify(w);
      CHECK(c.dominant == hit);
      CHECK_FALSE(c.ambiguous);
      const double expectation = w.vector().dot(z * w.vector()).real();
      CHECK(std::abs(expectation - rows[hit].label.zeta) < 1e-14);
    }
  }
  CHECK(classify(w_state(WPhase::zero)).dominant == 2);
  CHECK(rows[classify(w_state(WPhase::plus)).dominant].label.zeta > 0.0);
  CHECK(rows[classify(w_state(WPhase::minus)).dominant].label.zeta < 0.0);
}

TEST_CASE("labels print as halves") {
  CHECK(catalog()[0].label.str() == "|3/2, 3/2, 0>");
  CHECK(catalog()[5].label.str() == "|1/2, 1/2, -sqrt3/4>");
}
