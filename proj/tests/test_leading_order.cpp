#include "pslet/errors.hpp"
#include "pslet/leading_order.hpp"

#include "catch_amalgamated.hpp"

#include <algorithm>
#include <cmath>

using namespace pslet;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const cplx I{0.0, 1.0};

bool has_root(const std::vector<cplx> &roots, cplx r) {
  return std::any_of(roots.begin(), roots.end(), [&](cplx x) { return std::abs(x - r) < 1e-9 * std::abs(r); });
}

} // namespace

TEST_CASE("solve_r0 on closed-form potentials") {
  SECTION("Coulomb has one admissible root") {
    const double A = 1.7, lbar = 2.3;
    const auto roots = solve_r0(Potential::coulomb(A), lbar);
    REQUIRE(roots.size() == 1);
    CHECK(std::abs(roots[0] - 2.0 * I * lbar * lbar / A) < 1e-10);
  }
  SECTION("harmonic has four") {
    const double lbar = 3.0, s = std::sqrt(lbar);
    const auto roots = solve_r0(Potential::harmonic(), lbar);
    REQUIRE(roots.size() == 4);
    for (const cplx r : {cplx(s), cplx(-s), s * I, -s * I})
      CHECK(has_root(roots, r));
  }
  SECTION("cubic sits on the negative imaginary axis") {
    const double lbar = 4.5;
    const double G = std::sqrt(2.0 / 3.0) * lbar;
    const auto roots = solve_r0(Potential::ddt(0), lbar);
    REQUIRE(roots.size() == 1);
    CHECK(std::abs(roots[0] + I * std::pow(G, 0.4)) < 1e-10);
  }
  CHECK_THROWS_AS(solve_r0(Potential::harmonic(), 0.0), InvalidShift);
}

TEST_CASE("classify") {
  SECTION("Coulomb: Ω = 1, β⁻ = k") {
    const cplx r0 = 2.0 * I * 4.0;
    const auto c = classify(Potential::coulomb(1), r0, 3);
    CHECK(std::abs(c.Omega - 1.0) < 1e-14);
    CHECK_THAT(c.beta_minus, WithinAbs(3.0, 1e-13));
    CHECK(c.omega.real() > 0.0);
  }
  SECTION("harmonic: Ω = 2 at every minimum") {
    const int k = 2;
    for (const cplx r0 : {cplx(1.5), cplx(-1.5), 1.5 * I, -1.5 * I}) {
      const auto c = classify(Potential::harmonic(), r0, k);
      CHECK(std::abs(c.Omega - 2.0) < 1e-14);
      CHECK_THAT(c.beta_plus, WithinAbs(-(2.0 * k + 1.5), 1e-13));
      CHECK_THAT(c.beta_minus, WithinAbs(2.0 * k + 0.5, 1e-13));
      CHECK(c.omega.real() > 0.0);
    }
  }
  SECTION("cubic with spike: Ω² = 5(1+Z)/2") {
    const double alpha = 6.0, lbar = 7.0;
    const double delta = alpha / (2.0 * lbar);
    const double Z = cubic_Z(delta);
    const auto r0 = solve_r0(Potential::ddt(alpha), lbar).at(0);
    const auto c = classify(Potential::ddt(alpha), r0, 0);
    CHECK_THAT(std::norm(c.Omega), WithinRel(2.5 * (1.0 + Z), 1e-10));
    // r0 = -i G^{2/5} Z^{1/5}
    const double G = std::sqrt(2.0 / 3.0) * lbar;
    CHECK(std::abs(r0 + I * std::pow(G, 0.4) * std::pow(Z, 0.2)) < 1e-10);
  }
  CHECK_THROWS_AS(classify(Potential({{1.0, Rational(-4)}}), 1.0, 0), DegenerateCurvature);
}

TEST_CASE("self_consistent examples") {
  SECTION("Coulomb, ℓ_d = 1, k = 0") {
    const auto lead = self_consistent(Potential::coulomb(1), {0, 1.0}, BetaMode::minus);
    CHECK_THAT(lead.beta, WithinAbs(0.0, 1e-12));
    CHECK_THAT(lead.lbar, WithinAbs(1.0, 1e-12));
    CHECK(std::abs(lead.Q * lead.E_m2 - 0.25) < 1e-12);
  }
  SECTION("harmonic, mode plus") {
    const auto lead = self_consistent(Potential::harmonic(), {0, 0.0}, BetaMode::plus);
    CHECK(std::abs(lead.Q * lead.E_m2 - 3.0) < 1e-12);
    CHECK(std::abs(lead.r0.imag()) < 1e-12);
  }
  SECTION("DDT α = 0, ℓ = 5") {
    const auto lead = self_consistent(Potential::ddt(0), {0, 5.0}, BetaMode::minus);
    CHECK_THAT(lead.lbar, WithinAbs(4.4, 0.05));
    CHECK(lead.r0.imag() < 0.0);
  }
  SECTION("mode zero keeps β = 0") {
    const auto lead = self_consistent(Potential::ddt(0), {1, 10.0}, BetaMode::zero);
    CHECK(lead.beta == 0.0);
    CHECK(lead.lbar == 10.0);
  }
  SECTION("ℓ̄ = 0 is an invalid shift") {
    StateSpec s{0, 0.0, 3, QuasiParity{1, 0.5}};
    CHECK_THROWS_AS(self_consistent(Potential::coulomb(1), s, BetaMode::minus), InvalidShift);
  }
}

TEST_CASE("LeadingOrder invariants", "[property]") {
  for (double alpha : {-10.0, 0.0, 5.0, 20.0})
    for (double ell : {3.0, 10.0, 30.0})
      for (int k : {0, 1, 2}) {
        const auto pot = Potential::ddt(alpha);
        const auto lead = self_consistent(pot, {k, ell}, BetaMode::minus);
        const cplx z = 0.5 * std::pow(lead.r0, 3) * pot.eval_derivative(lead.r0, 1);
        CHECK(std::abs(z - lead.Q) < 1e-9 * lead.Q);
        CHECK(lead.Q == lead.lbar * lead.lbar);
        CHECK(std::abs(lead.E_m1) < 1e-10);
        CHECK(lead.omega.real() > 0.0);
        const cplx om = 2.0 * lead.Omega / (lead.r0 * lead.r0);
        CHECK(std::min(std::abs(lead.omega - om), std::abs(lead.omega + om)) < 1e-12 * std::abs(om));
        // dE^(-2)/dr0 = -2/r0³ + V'/Q vanishes at the minimum
        const cplx dE = -2.0 / std::pow(lead.r0, 3) + pot.eval_derivative(lead.r0, 1) / lead.Q;
        CHECK(std::abs(dE) < 1e-10 * std::abs(lead.E_m2 / lead.r0));
      }
}

TEST_CASE("cubic_Z") {
  CHECK(cubic_Z(0.0) == 1.0);
  CHECK_THAT(cubic_Z(1.0), WithinAbs(2.0 / 3.0, 1e-12));
  // independent check: Newton on the same equation from a different start
  double Z = 0.5;
  for (int i = 0; i < 50; ++i) {
    const double f = 1.0 - Z - 0.5 * std::sqrt(Z / 6.0);
    const double df = -1.0 - 0.5 / (2.0 * std::sqrt(6.0 * Z));
    Z -= f / df;
  }
  CHECK_THAT(cubic_Z(0.5), WithinAbs(Z, 1e-13));
  CHECK_THAT(cubic_Z(0.5), WithinAbs(0.81565, 1e-5));
  for (int i = 0; i <= 100; ++i) {
    const double d = i / 100.0, z = cubic_Z(d);
    CHECK(std::abs(1.0 - z - d * std::sqrt(z / 6.0)) < 1e-12);
  }
}

TEST_CASE("cubic closed forms against printed values") {
  CHECK_THAT(cubic_energy_beta0(0, 5, 1), WithinAbs(-11.517, 0.002));
  CHECK_THAT(cubic_energy_beta0(4, 10, 1), WithinAbs(4.58, 0.01));
  CHECK_THAT(cubic_energy_beta0(0, 50, 1), WithinAbs(-211.134, 0.002));
  CHECK_THAT(cubic_energy_betaminus(0, 5, 1), WithinAbs(-11.542, 0.002));
  CHECK_THAT(cubic_energy_betaminus(8, 20, 1), WithinAbs(-3.172, 0.002));
  CHECK_THAT(cubic_energy_betaminus(3, 50, 1), WithinAbs(-177.206, 0.002));
  CHECK_THROWS_AS(cubic_energy_beta0(0, 0.0, 1), InvalidShift);
  for (double ell : {-0.4, 0.0, 1.0})
    CHECK(std::isfinite(cubic_energy_betaminus(0, ell, 1.0)));
}

TEST_CASE("cubic closed forms are the generic leading terms") {
  const auto pot = Potential::ddt(0);
  for (double ell : {5.0, 10.0, 20.0, 50.0}) {
    const auto zero = self_consistent(pot, {0, ell}, BetaMode::zero);
    CHECK_THAT(zero.leading_energy().real(), WithinRel(cubic_energy_beta0(0, ell, 1.0), 1e-9));
    const auto minus = self_consistent(pot, {0, ell}, BetaMode::minus);
    CHECK_THAT(minus.leading_energy().real(), WithinRel(cubic_energy_betaminus(0, ell, 1.0), 1e-9));
  }
}

TEST_CASE("Coulomb closed forms") {
  CHECK_THAT(coulomb_energy(1, {1, 0.0}), WithinAbs(0.25, 1e-15));
  CHECK_THAT(coulomb_energy(2, {0, 0.0, 3, QuasiParity{-1, 1.0}}), WithinAbs(4.0 / 9.0, 1e-15));
  CHECK_THROWS_AS(coulomb_energy(1, {0, 0.0, 3, QuasiParity{1, 0.5}}), FlownAway);
  for (double c : {-2.0, 0.5, 3.0})
    CHECK_THAT(coulomb_energy(c * 1.3, {2, 0.4}), WithinRel(c * c * coulomb_energy(1.3, {2, 0.4}), 1e-14));
}

TEST_CASE("harmonic closed forms") {
  CHECK(harmonic_energy(0, 0.0, 1) == 3.0);
  CHECK(harmonic_energy(0, -1.0, 1) == 1.0);
  std::vector<double> levels;
  for (double ld : {-1.0, 0.0})
    for (int s : {1, -1})
      for (int k = 0; k <= 2; ++k)
        levels.push_back(harmonic_energy(k, ld, s));
  std::sort(levels.begin(), levels.end());
  // {2N+1}, each level twice
  for (std::size_t i = 0; i < levels.size(); ++i)
    CHECK(levels[i] == 2.0 * double(i / 2) + 1.0);
  CHECK_THROWS(harmonic_energy(0, 0.0, 0));
}

TEST_CASE("StateSpec ℓ_d") {
  CHECK(StateSpec{0, 2.0, 1}.ell_d() == 1.0);
  CHECK(StateSpec{0, 2.0, 3, QuasiParity{-1, 1.5}}.ell_d() == -2.0);
  CHECK(beta_mode_from_string("plus") == BetaMode::plus);
  CHECK_THROWS(beta_mode_from_string("sideways"));
}
