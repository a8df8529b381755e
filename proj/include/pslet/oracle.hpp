#pragma once

#include "pslet/potential.hpp"

#include <string>
#include <vector>

namespace pslet {

// Straight contour r(t) = t - ic, t in [-L, L], N points.
struct ContourGrid {
  double c{1.0};
  double L{10.0};
  int N{4001};

  double h() const { return 2.0 * L / (N - 1); }
  double t(int j) const { return -L + j * h(); }
  cplx r(int j) const { return {t(j), -c}; }
  void validate() const;
};

// c = max(|r0|, 1), L = 15|r0|^{1/5} + 10, N = 4001.
ContourGrid default_grid(cplx r0);

// Complex symmetric tridiagonal -d²/dt² + ℓ_d(ℓ_d+1)/r² + V(r) with Dirichlet ends.
struct DiscretizedOperator {
  std::vector<cplx> diagonal;
  cplx off_diagonal;
  double ell_d{0.0};
  ContourGrid grid;
};

DiscretizedOperator discretize(const Potential &pot, double ell_d, const ContourGrid &grid);

struct Eigenpair {
  cplx value;
  int iterations{0};
  double residual{0.0};  // |Ax - θx| / |x|
  double edge_mass{0.0}; // |x|² fraction in the outer 5% on each side
  std::vector<cplx> vector;
};

// Shifted inverse iteration; θ = σ + xᵀx / xᵀ(A-σ)^{-1}x, stops when |Δθ| < tol.
Eigenpair eigen_near_pair(const DiscretizedOperator &opr, cplx shift, double tol = 1e-12);
cplx eigen_near(const DiscretizedOperator &opr, cplx shift, double tol = 1e-12);

struct ScanResult {
  std::vector<cplx> eigenvalues;
  std::vector<std::string> failures;
};

// oracle_energy per shift, merged at 1e-8 relative and sorted by real part.
ScanResult spectrum_scan(const Potential &pot, double ell_d, const ContourGrid &grid,
                         const std::vector<cplx> &shifts, double tol = 1e-12);

// Grid-extrapolated eigenvalue near a shift.
struct OracleEstimate {
  cplx value;  // (4 E(h/2) - E(h)) / 3
  cplx coarse; // E(h)
  cplx fine;   // E(h/2)
  int iterations{0};
  double residual{0.0};
  ContourGrid grid; // coarse grid after any automatic widening
};

// Runs eigen_near at N and 2N-1 and removes the O(h²) term. If the state
// leaks into the outer 5% (mass >= 1e-8) the box is doubled once; if inverse
// iteration fails the contour is retried once at 2c.
OracleEstimate oracle_energy(const Potential &pot, double ell_d, cplx shift, ContourGrid grid,
                             double tol = 1e-12);

} // namespace pslet
