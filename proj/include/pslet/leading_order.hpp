#pragma once

#include "pslet/potential.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pslet {

// ℓ(ℓ+1) -> α_o² - 1/4 replacement: ℓ_d = -1/2 + q |α_o|.
struct QuasiParity {
  int q{1}; // +1 even, -1 odd
  double alpha_o{0.0};
};

// Quantum numbers of one bound state.
struct StateSpec {
  int k{0};
  double ell{0.0};
  int dim{3};
  std::optional<QuasiParity> quasi_parity;

  // ℓ_d = ℓ + (d-3)/2, or -1/2 + q|α_o| when a quasi-parity is set.
  double ell_d() const;
};

// How the shift β in l̄ = ℓ_d - β is fixed.
enum class BetaMode { zero, plus, minus };

std::string to_string(BetaMode mode);
BetaMode beta_mode_from_string(const std::string &name);

// Solved zeroth-order data of the shifted-ℓ expansion.
//
// l̄ is the magnitude |ℓ_d - β|; `reflected` records that ℓ_d - β was
// negative. The expansion itself only sees l̄, Q = l̄² and β.
struct LeadingOrder {
  cplx r0;
  cplx Omega;
  cplx omega;
  double beta{0.0};
  double lbar{0.0};
  double Q{0.0};
  cplx E_m2; // E^(-2) = 1/r0² + V(r0)/Q
  cplx E_m1; // E^(-1) = (2β+1)/r0² + (2k+1) ω/2
  BetaMode mode{BetaMode::minus};
  int k{0};
  double ell_d{0.0};
  bool reflected{false};
  int iterations{0};

  // l̄² E^(-2) + l̄ E^(-1): the two leading terms of the energy series.
  cplx leading_energy() const { return Q * E_m2 + lbar * E_m1; }
};

struct Classification {
  cplx Omega;
  cplx omega;
  double beta_plus;
  double beta_minus;
};

// Stationary points of l̄²/r0² + V(r0): roots of l̄² = r0³ V'(r0)/2 that keep
// l̄ real and give a real, positive ω². Newton from every seed, 200 steps.
std::vector<cplx> solve_r0(const Potential &pot, double lbar, std::span<const cplx> seeds);
// Same, from the default seed ring.
std::vector<cplx> solve_r0(const Potential &pot, double lbar);
// 16 seeds on the circle |r| = (2 l̄²/(3|c_top|))^{1/(p_top+2)}.
std::vector<cplx> default_seeds(const Potential &pot, double lbar);

// Ω = sqrt(3 + r0 V''/V'), ω = ±2Ω/r0² with Re ω > 0, β^(±) = -½[1 ± (2k+1)Ω].
Classification classify(const Potential &pot, cplx r0, int k);

struct SelfConsistentOptions {
  int max_iterations{500};
  double tolerance{1e-12};
};

// Fixed point β -> l̄ -> r0 -> Ω -> β for the requested mode; β = 0 skips it.
// Mode plus pairs with a real r0, mode minus with an imaginary r0.
LeadingOrder self_consistent(const Potential &pot, const StateSpec &state, BetaMode mode,
                             const SelfConsistentOptions &options = {});

// Root Z in (0, 1] of 1 - Z = δ sqrt(Z/6) (Z > 1 for δ < 0), by bisection.
double cubic_Z(double delta);

// Imaginary cubic energy through E^(-1) with β = 0 and l̄ = ℓ_d.
double cubic_energy_beta0(int k, double ell_d, double Z);
// Imaginary cubic energy l̄²E^(-2) with β = β^(-) (E^(-1) = 0).
double cubic_energy_betaminus(int k, double ell_d, double Z);

// PT Coulomb: A²/(4(k-ℓ_d)²), or A²/(2k+1-2q|α_o|)² with a quasi-parity.
double coulomb_energy(double A, const StateSpec &state);

// PT harmonic oscillator: E^(±) = 4k + 2 ± (2ℓ_d + 1).
double harmonic_energy(int k, double ell_d, int sign);

} // namespace pslet
