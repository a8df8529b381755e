#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pslet {

// Base class for every failure raised by the solver pipeline.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Potential evaluated at a pole or on the branch point/cut.
class DomainError : public Error {
public:
  using Error::Error;
};

// No Newton seed converged to a stationary point of the leading term.
class RootFailure : public Error {
public:
  RootFailure(const std::string &what, double best_residual)
      : Error(what), best_residual(best_residual) {}
  double best_residual;
};

// Stationary points exist, but none passes the reality/curvature filter.
class NoAdmissibleMinimum : public Error {
public:
  using Error::Error;
};

// 3 + r0 V''/V' is a negative real number: no real harmonic frequency.
class DegenerateCurvature : public Error {
public:
  using Error::Error;
};

// The beta <-> r0 self-consistency loop did not settle.
class FixedPointDivergence : public Error {
public:
  FixedPointDivergence(const std::string &what, std::vector<double> orbit)
      : Error(what), beta_orbit(std::move(orbit)) {}
  std::vector<double> beta_orbit;
};

// The shifted angular momentum vanished (or a closed form left its domain).
class InvalidShift : public Error {
public:
  InvalidShift(const std::string &what, double lbar) : Error(what), lbar(lbar) {}
  double lbar;
};

// Closed-form energy denominator vanishes: the state leaves the spectrum.
class FlownAway : public Error {
public:
  using Error::Error;
};

// A triangular step of the Riccati hierarchy hit a vanishing pivot.
class HierarchyDegeneracy : public Error {
public:
  HierarchyDegeneracy(const std::string &what, int order, int power)
      : Error(what), order(order), power(power) {}
  int order; // half-order index j of l̄^(-j/2)
  int power; // power of x whose coefficient could not be solved
};

class PadeFailure : public Error {
public:
  using Error::Error;
};

class ContourError : public Error {
public:
  using Error::Error;
};

class OracleFailure : public Error {
public:
  using Error::Error;
};

} // namespace pslet
