#include "pslet/errors.hpp"
#include "pslet/pade.hpp"

#include "catch_amalgamated.hpp"

#include <random>

using namespace pslet;

namespace {

// Maclaurin coefficients of P/Q, Q(0) = 1
std::vector<cplx> taylor_of_ratio(const std::vector<cplx> &P, const std::vector<cplx> &Q, int n) {
  std::vector<cplx> c(n);
  for (int i = 0; i < n; ++i) {
    cplx s = i < int(P.size()) ? P[i] : cplx{};
    for (int j = 1; j <= std::min(i, int(Q.size()) - 1); ++j)
      s -= Q[j] * c[i - j];
    c[i] = s;
  }
  return c;
}

cplx horner(const std::vector<cplx> &p, cplx x) {
  cplx s{};
  for (auto it = p.rbegin(); it != p.rend(); ++it)
    s = s * x + *it;
  return s;
}

EnergySeries series_with_tail(std::vector<cplx> tail, double lbar) {
  EnergySeries s;
  s.lbar = lbar;
  s.E = {0.5, 0.25};
  s.E.insert(s.E.end(), tail.begin(), tail.end());
  return s;
}

} // namespace

TEST_CASE("geometric series") {
  const std::vector<cplx> c{1.0, 1.0, 1.0};
  const auto p = pade_from_coefficients(c, 0, 1);
  CHECK(std::abs(p(0.5) - 2.0) < 1e-15);
  CHECK(std::abs(p.denominator[1] + 1.0) < 1e-15);
}

TEST_CASE("Padé reproduces rational functions", "[property]") {
  std::mt19937 rng(99);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 200; ++trial) {
    const int L = 1 + trial % 4, M = 1 + (trial / 4) % 3;
    std::vector<cplx> P(L + 1), Q(M + 1);
    for (auto &x : P)
      x = {g(rng), g(rng)};
    Q[0] = 1.0;
    for (int j = 1; j <= M; ++j)
      Q[j] = {0.4 * g(rng), 0.4 * g(rng)};
    const auto c = taylor_of_ratio(P, Q, L + M + 1);
    const auto p = pade_from_coefficients(c, L, M);
    const cplx u = 0.1;
    CHECK(std::abs(p(u) - horner(P, u) / horner(Q, u)) < 1e-9 * std::max(1.0, std::abs(p(u))));
  }
}

TEST_CASE("Padé matches the Maclaurin coefficients", "[property]") {
  std::mt19937 rng(5);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<cplx> c(9);
    for (auto &x : c)
      x = {g(rng), g(rng)};
    for (int L = 2; L <= 5; ++L) {
      const int M = 8 - L > 4 ? 3 : 8 - L;
      const auto p = pade_from_coefficients(c, L, M);
      // Q c - P = O(u^{L+M+1}): orders L+1..L+M of Q c vanish, orders up to L give P
      for (int n = 0; n <= L + M; ++n) {
        cplx qc{};
        double scale = 0.0;
        for (int j = 0; j <= std::min(n, M); ++j) {
          qc += p.denominator[j] * c[n - j];
          scale += std::abs(p.denominator[j] * c[n - j]);
        }
        const cplx want = n <= L ? p.numerator[n] : cplx{};
        CHECK(std::abs(qc - want) < 1e-12 * std::max(1.0, scale));
      }
    }
  }
}

TEST_CASE("Padé failures") {
  const std::vector<cplx> c{1.0, 0.0, 0.0, 1.0, 0.0};
  CHECK_THROWS_AS(pade_from_coefficients(c, 1, 2), PadeFailure);
  CHECK_THROWS_AS(pade_from_coefficients(c, 3, 2), PadeFailure);
  CHECK_THROWS_AS(pade_from_coefficients(c, -1, 1), PadeFailure);
  // terminating input: q = 0 is accepted
  const std::vector<cplx> t{2.0, 1.0, 0.0, 0.0, 0.0};
  const auto p = pade_from_coefficients(t, 2, 2);
  CHECK(std::abs(p(0.5) - 2.5) < 1e-15);
}

TEST_CASE("pade_resum") {
  SECTION("singular [1/2] falls back to [1/1]") {
    const auto s = series_with_tail({1.0, 0.0, 0.0, 1.0}, 4.0);
    const auto v = pade_resum(s, 1, 2);
    CHECK(v.M == 1);
    CHECK(std::abs(v.value - (s.head() + 1.0)) < 1e-15);
  }
  SECTION("a pole at u = 1/l̄ counts as a failure") {
    const double lbar = 2.0;
    const auto s = series_with_tail({1.0, lbar, lbar * lbar}, lbar);
    const auto v = pade_resum(s, 0, 1);
    CHECK(v.M == 0);
    CHECK(std::abs(v.value - (s.head() + 1.0)) < 1e-15);
  }
  SECTION("order check") {
    const auto s = series_with_tail({1.0, 2.0, 3.0}, 3.0);
    CHECK_THROWS_AS(pade_resum(s, 2, 2), PadeFailure);
  }
  SECTION("real series give real values") {
    const auto s = series_with_tail({1.0, -0.5, 0.3, 0.7, -0.2, 0.1}, 3.0);
    const auto v = pade_resum(s, 3, 2);
    CHECK(v.value.imag() == 0.0);
    CHECK(pade_eval(s, 3, 2) == v.value.real());
  }
}
