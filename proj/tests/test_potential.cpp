#include "pslet/errors.hpp"
#include "pslet/potential.hpp"

#include "catch_amalgamated.hpp"

#include <cmath>
#include <random>

using namespace pslet;
using Catch::Matchers::WithinAbs;

namespace {

const cplx I{0.0, 1.0};

bool close(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

// random point well away from the origin and the upward cut
cplx random_point(std::mt19937 &rng) {
  std::uniform_real_distribution<double> mag(0.3, 3.0), ang(-1.5 * M_PI + 0.2, 0.5 * M_PI - 0.2);
  return std::polar(mag(rng), ang(rng));
}

Potential random_potential(std::mt19937 &rng) {
  const Rational pool[] = {{-1}, {1, 2}, {2}, {3}, {-1, 2}, {1}, {4}};
  std::uniform_int_distribution<int> pick(0, 6);
  std::normal_distribution<double> g;
  std::vector<PotentialTerm> terms;
  for (int i = 0; i < 3; ++i)
    terms.push_back({cplx(g(rng), g(rng)), pool[pick(rng)]});
  return Potential(terms);
}

} // namespace

TEST_CASE("branch_pow on the upward cut convention") {
  CHECK(close(branch_pow(-I, 0.5), std::polar(1.0, -M_PI / 4), 1e-15));
  CHECK(close(branch_pow(1.0, 0.5), 1.0, 1e-15));
  CHECK(close(branch_pow(I * (-I), 0.5), 1.0, 1e-15));
  // arg(-1) lies at -π, not +π
  CHECK(close(branch_pow(-1.0, 0.5), -I, 1e-15));
  CHECK(close(branch_pow(cplx(2.0, -1.0), Rational(3)), std::pow(cplx(2.0, -1.0), 3), 1e-14));
  CHECK_THROWS_AS(branch_pow(0.0, -1.0), DomainError);
  CHECK_THROWS_AS(branch_pow(0.0, 0.5), DomainError);
  CHECK(branch_pow(0.0, 2.0) == cplx{});
}

TEST_CASE("branch_pow exponent law", "[property]") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> p(-3.0, 3.0);
  for (int i = 0; i < 500; ++i) {
    const cplx r = random_point(rng);
    const double a = p(rng), b = p(rng);
    CHECK(close(branch_pow(r, a + b), branch_pow(r, a) * branch_pow(r, b), 1e-12));
  }
}

TEST_CASE("eval examples") {
  CHECK(close(Potential::ddt(0).eval(-I), -1.0, 1e-15));
  CHECK(close(Potential::coulomb(2).eval(2.0 * I), 1.0, 1e-15));
  CHECK(close(Potential::ddt(1).eval(-I), -2.0, 1e-15));
}

TEST_CASE("eval_derivative examples") {
  const cplx r{0.7, -1.3};
  CHECK(close(Potential::harmonic().eval_derivative(r, 2), 2.0, 1e-15));
  const cplx r0 = 2.0 * I;
  CHECK(close(Potential::coulomb(3).eval_derivative(r0, 1), -3.0 * I / (r0 * r0), 1e-15));
  CHECK(close(Potential::ddt(0).eval_derivative(r, 3), 6.0 * I, 1e-15));
  CHECK(close(Potential::ddt(2).eval_derivative(r, 0), Potential::ddt(2).eval(r), 0.0));
}

TEST_CASE("eval_derivative matches central differences", "[property]") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto pot = random_potential(rng);
    const cplx r = random_point(rng);
    const double h = 1e-5 * std::abs(r);
    for (int n = 1; n <= 4; ++n) {
      // derivative of order n from central differences of order n-1
      const cplx fd = (pot.eval_derivative(r + h, n - 1) - pot.eval_derivative(r - h, n - 1)) / (2.0 * h);
      const cplx exact = pot.eval_derivative(r, n);
      CHECK(std::abs(fd - exact) <= 1e-6 * std::max(std::abs(exact), 1e-3));
    }
  }
}

TEST_CASE("taylor coefficient is the derivative over n!") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto pot = random_potential(rng);
    const cplx r = random_point(rng);
    double fact = 1.0;
    for (int n = 0; n <= 8; ++n) {
      if (n > 0)
        fact *= n;
      CHECK(close(pot.taylor_coefficient(r, n), pot.eval_derivative(r, n) / fact, 1e-11));
    }
  }
}

TEST_CASE("PT symmetry of the DDT potential", "[property]") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> alpha(-20.0, 20.0);
  for (int i = 0; i < 200; ++i) {
    const auto pot = Potential::ddt(alpha(rng));
    const cplx r = random_point(rng);
    const cplx mirrored = -std::conj(r);
    if (pot.cut().on_cut(mirrored, 1e-6))
      continue;
    CHECK(close(pot.eval(mirrored), std::conj(pot.eval(r)), 1e-12));
  }
}

TEST_CASE("terms are merged and sorted") {
  Potential pot({{1.0, Rational(3)}, {2.0, Rational(1, 2)}, {I, Rational(6, 2)}});
  REQUIRE(pot.terms().size() == 2);
  CHECK(pot.terms()[0].exponent == Rational(1, 2));
  CHECK(pot.terms()[1].coeff == cplx(1.0, 1.0));
  CHECK(pot.top_term().exponent == Rational(3));
  CHECK_THROWS(Potential({{0.0, Rational(2)}}));
  CHECK_THROWS(Potential({{1.0, Rational(2)}}, BranchCut{-1.0, 1.0}));
}

TEST_CASE("presets") {
  CHECK(Potential::preset("ddt(20)").terms().size() == 2);
  CHECK(Potential::preset("ddt(0)").terms().size() == 1);
  CHECK(Potential::preset("coulomb(1.5)").terms()[0].coeff == cplx(0.0, 1.5));
  CHECK(Potential::preset("harmonic").terms()[0].exponent == Rational(2));
  CHECK_THROWS(Potential::preset("quartic"));
}

TEST_CASE("ddt_threshold") {
  CHECK_THAT(ddt_threshold(0), WithinAbs(-0.5, 1e-15));
  CHECK_THAT(ddt_threshold(3.5), WithinAbs(0.0, 1e-15));
  CHECK_THAT(ddt_threshold(20), WithinAbs(33.0 / 4.0, 1e-15));
}
