#include "pslet/oracle.hpp"
#include "pslet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace pslet {

namespace {

// LU of a tridiagonal matrix with row interchanges, LAPACK gttrf layout.
struct TridiagonalLU {
  std::vector<cplx> dl, d, du, du2;
  std::vector<int> swapped;
  bool ok{true};

  TridiagonalLU(const std::vector<cplx> &diag, cplx off, cplx shift) {
    const std::size_t n = diag.size();
    d.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      d[i] = diag[i] - shift;
    dl.assign(n - 1, off);
    du.assign(n - 1, off);
    du2.assign(n, cplx{});
    swapped.assign(n, 0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (std::abs(d[i]) >= std::abs(dl[i])) {
        if (d[i] == cplx{}) {
          ok = false;
          return;
        }
        const cplx f = dl[i] / d[i];
        dl[i] = f;
        d[i + 1] -= f * du[i];
      } else {
        const cplx f = d[i] / dl[i];
        d[i] = dl[i];
        dl[i] = f;
        const cplx tmp = du[i];
        du[i] = d[i + 1];
        d[i + 1] = tmp - f * d[i + 1];
        if (i + 2 < n) {
          du2[i] = du[i + 1];
          du[i + 1] = -f * du[i + 1];
        }
        swapped[i] = 1;
      }
    }
    ok = ok && d[n - 1] != cplx{};
  }

  void solve(std::vector<cplx> &b) const {
    const std::size_t n = d.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (swapped[i]) {
        const cplx tmp = b[i];
        b[i] = b[i + 1];
        b[i + 1] = tmp - dl[i] * b[i];
      } else {
        b[i + 1] -= dl[i] * b[i];
      }
    }
    b[n - 1] /= d[n - 1];
    if (n > 1)
      b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
    for (std::size_t i = n - 2; i-- > 0;)
      b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
  }
};

cplx bilinear(const std::vector<cplx> &a, const std::vector<cplx> &b) {
  cplx s{};
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

double norm(const std::vector<cplx> &a) {
  double s = 0.0;
  for (const auto v : a)
    s += std::norm(v);
  return std::sqrt(s);
}

} // namespace

void ContourGrid::validate() const {
  if (!(c > 0.0))
    throw ContourError("contour r = t - ic needs c > 0 to avoid the origin and the cut");
  if (!(L > 0.0))
    throw ContourError("contour half-width must be positive");
  if (N < 3 || N % 2 == 0)
    throw ContourError("contour grid needs an odd N >= 3");
}

ContourGrid default_grid(cplx r0) {
  const double a = std::abs(r0);
  // near the origin the centrifugal pole spoils the straight contour
  return {std::max(a, 1.0), 15.0 * std::pow(a, 0.2) + 10.0, 4001};
}

DiscretizedOperator discretize(const Potential &pot, double ell_d, const ContourGrid &grid) {
  grid.validate();
  DiscretizedOperator op;
  op.grid = grid;
  op.ell_d = ell_d;
  const double h = grid.h();
  const double cent = ell_d * (ell_d + 1.0);
  op.off_diagonal = -1.0 / (h * h);
  op.diagonal.resize(grid.N);
  for (int j = 0; j < grid.N; ++j) {
    const cplx r = grid.r(j);
    if (pot.cut().on_cut(r))
      throw ContourError("contour point on the branch cut");
    op.diagonal[j] = cent / (r * r) + pot.eval(r) + 2.0 / (h * h);
  }
  return op;
}

Eigenpair eigen_near_pair(const DiscretizedOperator &opr, cplx shift, double tol) {
  const std::size_t n = opr.diagonal.size();
  TridiagonalLU lu(opr.diagonal, opr.off_diagonal, shift);
  for (int retry = 0; !lu.ok && retry < 8; ++retry) {
    shift += tol * (1.0 + std::abs(shift));
    lu = TridiagonalLU(opr.diagonal, opr.off_diagonal, shift);
  }
  if (!lu.ok)
    throw OracleFailure("eigen_near: LU breakdown at the shift");

  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> dist(0.5, 1.5);
  std::vector<cplx> x(n);
  for (auto &v : x)
    v = dist(rng);
  const double x0 = norm(x);
  for (auto &v : x)
    v /= x0;

  Eigenpair out;
  cplx theta = shift;
  bool converged = false;
  int it = 0;
  for (; it < 500; ++it) {
    std::vector<cplx> y = x;
    lu.solve(y);
    const cplx den = bilinear(x, y);
    const cplx next = den == cplx{} ? shift : shift + bilinear(x, x) / den;
    const double ny = norm(y);
    if (!(ny > 0.0) || !std::isfinite(ny))
      throw OracleFailure("eigen_near: iteration vector collapsed");
    for (std::size_t i = 0; i < n; ++i)
      x[i] = y[i] / ny;
    const bool small = std::abs(next - theta) < tol * std::max(1.0, std::abs(next));
    theta = next;
    if (small && it > 0) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw OracleFailure("eigen_near: no convergence in 500 iterations");

  // |Ax - θx| with the final vector; θ from the bilinear Rayleigh quotient
  const cplx off = opr.off_diagonal;
  std::vector<cplx> Ax(n);
  for (std::size_t i = 0; i < n; ++i) {
    cplx s = opr.diagonal[i] * x[i];
    if (i > 0)
      s += off * x[i - 1];
    if (i + 1 < n)
      s += off * x[i + 1];
    Ax[i] = s;
  }
  const cplx xx = bilinear(x, x);
  if (xx != cplx{})
    theta = bilinear(x, Ax) / xx;
  double r = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    r += std::norm(Ax[i] - theta * x[i]);
  out.residual = std::sqrt(r);

  const std::size_t edge = std::max<std::size_t>(1, n / 20);
  double outer = 0.0, total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    total += std::norm(x[i]);
    if (i < edge || i >= n - edge)
      outer += std::norm(x[i]);
  }
  out.edge_mass = outer / total;
  out.value = theta;
  out.iterations = it + 1;
  out.vector = std::move(x);
  return out;
}

cplx eigen_near(const DiscretizedOperator &opr, cplx shift, double tol) {
  return eigen_near_pair(opr, shift, tol).value;
}

ScanResult spectrum_scan(const Potential &pot, double ell_d, const ContourGrid &grid,
                         const std::vector<cplx> &shifts, double tol) {
  ScanResult out;
  grid.validate();
  for (const auto s : shifts) {
    try {
      const cplx e = oracle_energy(pot, ell_d, s, grid, tol).value;
      const bool seen = std::any_of(out.eigenvalues.begin(), out.eigenvalues.end(), [&](cplx v) {
        return std::abs(v - e) <= 1e-8 * std::max(1.0, std::abs(e));
      });
      if (!seen)
        out.eigenvalues.push_back(e);
    } catch (const Error &err) {
      out.failures.push_back(err.what());
    }
  }
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(),
            [](cplx a, cplx b) { return a.real() < b.real(); });
  return out;
}

namespace {

OracleEstimate extrapolate(const Potential &pot, double ell_d, cplx shift, ContourGrid grid, double tol) {
  auto coarse = eigen_near_pair(discretize(pot, ell_d, grid), shift, tol);
  if (coarse.edge_mass >= 1e-8) {
    grid.L *= 2.0;
    grid.N = 2 * grid.N - 1;
    coarse = eigen_near_pair(discretize(pot, ell_d, grid), coarse.value, tol);
  }
  ContourGrid fine_grid = grid;
  fine_grid.N = 2 * grid.N - 1;
  const auto fine = eigen_near_pair(discretize(pot, ell_d, fine_grid), coarse.value, tol);

  OracleEstimate out;
  out.coarse = coarse.value;
  out.fine = fine.value;
  out.value = fine.value + (fine.value - coarse.value) / 3.0;
  out.iterations = coarse.iterations + fine.iterations;
  out.residual = std::max(coarse.residual, fine.residual);
  out.grid = grid;
  return out;
}

} // namespace

OracleEstimate oracle_energy(const Potential &pot, double ell_d, cplx shift, ContourGrid grid,
                             double tol) {
  try {
    return extrapolate(pot, ell_d, shift, grid, tol);
  } catch (const OracleFailure &) {
    // spurious modes from the centrifugal pole crowd the shift; move the contour away
    grid.c *= 2.0;
    return extrapolate(pot, ell_d, shift, grid, tol);
  }
}

} // namespace pslet
