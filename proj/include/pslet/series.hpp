#pragma once

#include "pslet/leading_order.hpp"
#include "pslet/polynomial.hpp"

#include <vector>

namespace pslet {

// Expansion of the shifted radial equation about r0 in x = l̄^{1/2}(r - r0).
struct ExpansionTables {
  std::vector<cplx> B; // B_n = T_n + V^(n)(r0)/(n! Q)
  std::vector<cplx> T; // T_n = (-1)^n (n+1)/r0^{n+2}
  std::vector<Poly> v; // v^(n)(x), coefficient of l̄^{-n/2} in the perturbation
  cplx eps0;           // ε0 = B0 l̄ + (2β+1)T0 + β(β+1)T0/l̄
  cplx r0;
  cplx omega;
  double beta{0.0};
  double lbar{0.0};
  double Q{0.0};
  int n_max{0};

  // Highest power j of l̄^{-1/2} needed to reach E^(n_max).
  int half_orders() const { return 2 * n_max + 2; }
};

ExpansionTables build_expansions(const Potential &pot, const LeadingOrder &lead, int n_max);

// Ψ = F exp(U) with U' = Σ u_j l̄^{-j/2} and F = Σ F_j l̄^{-j/2}.
//
// u_j holds the odd part U^(j) (coefficients D) and the even part G^(j-1)
// (coefficients C); F_0 carries the unit x^k term.
struct RiccatiAnsatz {
  int k{0};
  int n_max{0};
  std::vector<Poly> u;
  std::vector<Poly> f;

  // Coefficient of x^{2m-1} in U^(n).
  cplx D(int m, int n) const;
  // Coefficient of x^{2m} in G^(n).
  cplx C(int m, int n) const;
  // Coefficient of x^p (p < k) in the order-n part of F.
  cplx a(int p, int n) const;
};

struct HierarchySolution {
  RiccatiAnsatz ansatz;
  std::vector<cplx> lambda;       // λ^(n), n = 0..n_max
  std::vector<cplx> half_energy;  // e_j: energy coefficient of l̄^{-j/2} in the divided equation
};

// Solves the Riccati hierarchy order by order in l̄^{-1/2}.
// Each order is a triangular system with pivots ω and (p - k)ω.
HierarchySolution solve_hierarchy(const ExpansionTables &tables, int k, double beta, int n_max);

// Per half-order residual of the Riccati equation after re-substitution,
// relative to the largest term magnitude at that order.
std::vector<double> riccati_residual(const ExpansionTables &tables, const HierarchySolution &sol);

// E = Σ_{n=-2}^{N} E^(n) l̄^{-n}.
struct EnergySeries {
  std::vector<cplx> E; // E^(n) stored at index n + 2
  std::vector<cplx> lambda;
  double lbar{0.0};
  BetaMode mode{BetaMode::minus};

  int n_max() const { return static_cast<int>(E.size()) - 3; }
  cplx coefficient(int n) const { return E.at(static_cast<std::size_t>(n + 2)); }
  // l̄² E^(-2) + l̄ E^(-1), kept outside any resummation.
  cplx head() const;
  // Partial sum through n = M.
  cplx total(int M) const;
  // E^(n) for n = 0..n_max, the resummed tail in u = 1/l̄.
  std::vector<cplx> tail() const;
};

EnergySeries assemble(const LeadingOrder &lead, const std::vector<cplx> &lambda);

// build_expansions -> solve_hierarchy -> assemble.
EnergySeries expand(const Potential &pot, const LeadingOrder &lead, int n_max);

} // namespace pslet
