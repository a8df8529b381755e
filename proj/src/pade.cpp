#include "pslet/pade.hpp"
#include "pslet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pslet {

namespace {

constexpr double kSingular = 1e-13;

cplx horner(const std::vector<cplx> &p, cplx u) {
  cplx r{};
  for (auto it = p.rbegin(); it != p.rend(); ++it)
    r = r * u + *it;
  return r;
}

// Solves A x = b in place with partial pivoting; false if a pivot collapses.
bool gauss(std::vector<std::vector<cplx>> A, std::vector<cplx> &b) {
  const std::size_t n = b.size();
  double amax = 0.0;
  for (const auto &row : A)
    for (const auto v : row)
      amax = std::max(amax, std::abs(v));
  if (amax == 0.0)
    return false;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(A[r][c]) > std::abs(A[piv][c]))
        piv = r;
    if (std::abs(A[piv][c]) < kSingular * amax)
      return false;
    std::swap(A[piv], A[c]);
    std::swap(b[piv], b[c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const cplx f = A[r][c] / A[c][c];
      for (std::size_t j = c; j < n; ++j)
        A[r][j] -= f * A[c][j];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t c = n; c-- > 0;) {
    cplx s = b[c];
    for (std::size_t j = c + 1; j < n; ++j)
      s -= A[c][j] * b[j];
    b[c] = s / A[c][c];
  }
  return true;
}

} // namespace

cplx PadeApproximant::operator()(cplx u) const { return horner(numerator, u) / horner(denominator, u); }

PadeApproximant pade_from_coefficients(std::span<const cplx> c, int L, int M) {
  if (L < 0 || M < 0 || std::size_t(L + M + 1) > c.size())
    throw PadeFailure("pade: need " + std::to_string(L + M + 1) + " coefficients for [" +
                      std::to_string(L) + "/" + std::to_string(M) + "]");
  auto cc = [&](int n) { return n < 0 ? cplx{} : c[std::size_t(n)]; };

  PadeApproximant p;
  p.L = L;
  p.M = M;
  p.denominator.assign(M + 1, cplx{});
  p.denominator[0] = 1.0;
  if (M > 0) {
    // Σ_{j=1}^{M} q_j c_{L+i-j} = -c_{L+i}, i = 1..M
    std::vector<std::vector<cplx>> A(M, std::vector<cplx>(M));
    std::vector<cplx> rhs(M);
    bool zero_rhs = true;
    for (int i = 1; i <= M; ++i) {
      for (int j = 1; j <= M; ++j)
        A[i - 1][j - 1] = cc(L + i - j);
      rhs[i - 1] = -cc(L + i);
      zero_rhs = zero_rhs && rhs[i - 1] == cplx{};
    }
    // A terminating series is its own approximant; q = 0 then solves any A.
    if (!zero_rhs) {
      if (!gauss(A, rhs))
        throw PadeFailure("pade: singular denominator system for [" + std::to_string(L) + "/" +
                          std::to_string(M) + "]");
      for (int j = 1; j <= M; ++j)
        p.denominator[j] = rhs[j - 1];
    }
  }
  p.numerator.resize(L + 1);
  for (int i = 0; i <= L; ++i) {
    cplx s = cc(i);
    for (int j = 1; j <= std::min(i, M); ++j)
      s += p.denominator[j] * cc(i - j);
    p.numerator[i] = s;
  }
  return p;
}

PadeValue pade_resum(const EnergySeries &series, int L, int M) {
  if (L + M > series.n_max())
    throw PadeFailure("pade: L + M exceeds the series order");
  const auto tail = series.tail();
  const cplx u = 1.0 / series.lbar;
  std::string reason;
  for (int m = M; m >= std::max(M - 1, 0); --m) {
    try {
      const auto approx = pade_from_coefficients(tail, L, m);
      const cplx den = horner(approx.denominator, u);
      if (std::abs(den) < kSingular)
        throw PadeFailure("pade: pole at u = 1/l̄");
      return {series.head() + approx(u), L, m};
    } catch (const PadeFailure &e) {
      reason = e.what();
    }
  }
  throw PadeFailure(reason);
}

double pade_eval(const EnergySeries &series, int L, int M) { return pade_resum(series, L, M).value.real(); }

} // namespace pslet
