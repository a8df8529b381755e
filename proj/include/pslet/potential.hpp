#pragma once

#include <complex>
#include <numbers>
#include <string>
#include <vector>

namespace pslet {

using cplx = std::complex<double>;

// Small exact rational, always normalised (gcd 1, positive denominator).
struct Rational {
  long num{0};
  long den{1};

  Rational() = default;
  Rational(long n, long d = 1);

  double value() const { return double(num) / double(den); }
  bool is_integer() const { return den == 1; }

  friend bool operator==(const Rational &, const Rational &) = default;
  friend bool operator<(const Rational &a, const Rational &b) {
    return a.num * b.den < b.num * a.den;
  }
  friend Rational operator-(const Rational &a, long n) {
    return Rational(a.num - n * a.den, a.den);
  }
};

// Argument range (angle_lo, angle_hi] of the cut complex plane.
// The default cuts from the origin upwards: arg r in (-3pi/2, pi/2].
struct BranchCut {
  double angle_lo{-1.5 * std::numbers::pi};
  double angle_hi{0.5 * std::numbers::pi};

  static BranchCut with_upper_edge(double angle_hi) {
    return {angle_hi - 2.0 * std::numbers::pi, angle_hi};
  }
  // arg r mapped into (angle_lo, angle_hi].
  double arg(cplx r) const;
  // True when r lies on the cut ray itself (within a relative angle tol).
  bool on_cut(cplx r, double tol = 1e-14) const;
};

// r^p on the cut plane, exp(p (ln|r| + i arg r)) with arg taken from `cut`.
// Throws DomainError at r = 0 unless p is a non-negative integer.
cplx branch_pow(cplx r, double p, const BranchCut &cut = {});
cplx branch_pow(cplx r, const Rational &p, const BranchCut &cut = {});

struct PotentialTerm {
  cplx coeff;
  Rational exponent;
};

// V(r) = sum_j c_j r^{p_j}, one term per exponent, sorted by exponent.
class Potential {
public:
  Potential() = default;
  explicit Potential(std::vector<PotentialTerm> terms, BranchCut cut = {});

  const std::vector<PotentialTerm> &terms() const { return terms_; }
  const BranchCut &cut() const { return cut_; }
  // Term with the largest exponent; it fixes the large-r scale of r0.
  const PotentialTerm &top_term() const;

  cplx eval(cplx r) const;
  // n-th derivative, falling-factorial prefactors from the exact exponents.
  cplx eval_derivative(cplx r, int n) const;
  // V^(n)(r)/n!, evaluated with generalized binomial coefficients.
  cplx taylor_coefficient(cplx r, int n) const;

  // V(r) = i r^3 - alpha sqrt(i r), with sqrt(i r) = e^{i pi/4} r^{1/2}.
  static Potential ddt(double alpha);
  // V(r) = i A / r.
  static Potential coulomb(double A);
  // V(r) = r^2.
  static Potential harmonic();
  // Parses "ddt(alpha)", "coulomb(A)" or "harmonic".
  static Potential preset(const std::string &spec);

  std::string describe() const;

private:
  std::vector<PotentialTerm> terms_;
  BranchCut cut_;
};

// Lower edge of the proven reality domain, max[(2 alpha - 7)/4, -1/2].
double ddt_threshold(double alpha);

} // namespace pslet
