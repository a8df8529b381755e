#pragma once

#include "pslet/series.hpp"

#include <span>
#include <vector>

namespace pslet {

// [L/M](u) = P_L(u) / Q_M(u), Q_M(0) = 1.
struct PadeApproximant {
  std::vector<cplx> numerator;
  std::vector<cplx> denominator;
  int L{0};
  int M{0};

  cplx operator()(cplx u) const;
};

// Builds [L/M] from Maclaurin coefficients c_0..c_{L+M}. Throws PadeFailure
// when the denominator system is singular.
PadeApproximant pade_from_coefficients(std::span<const cplx> c, int L, int M);

struct PadeValue {
  cplx value;
  int L{0};
  int M{0}; // degree actually used after any fallback
};

// head + [L/M](1/l̄) over the n >= 0 tail, falling back to [L/M-1].
PadeValue pade_resum(const EnergySeries &series, int L, int M);

// Real part of pade_resum.
double pade_eval(const EnergySeries &series, int L, int M);

} // namespace pslet
