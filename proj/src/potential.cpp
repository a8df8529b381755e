#include "pslet/potential.hpp"
#include "pslet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <regex>
#include <sstream>

namespace pslet {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

// r^n for integer n by repeated squaring; exact branch-free.
cplx int_pow(cplx r, long n) {
  if (n < 0)
    return 1.0 / int_pow(r, -n);
  cplx result{1.0, 0.0};
  cplx base = r;
  while (n > 0) {
    if (n & 1)
      result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}
} // namespace

Rational::Rational(long n, long d) {
  if (d == 0)
    throw std::invalid_argument("Rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const long g = std::gcd(n, d);
  num = g ? n / g : 0;
  den = g ? d / g : 1;
}

double BranchCut::arg(cplx r) const {
  double a = std::arg(r);
  while (a <= angle_lo)
    a += two_pi;
  while (a > angle_hi)
    a -= two_pi;
  return a;
}

bool BranchCut::on_cut(cplx r, double tol) const {
  if (r == cplx{})
    return true;
  return std::abs(arg(r) - angle_hi) <= tol * two_pi;
}

cplx branch_pow(cplx r, double p, const BranchCut &cut) {
  if (r == cplx{}) {
    if (p == 0.0)
      return 1.0;
    if (p < 0.0)
      throw DomainError("branch_pow: pole at r = 0");
    if (p != std::floor(p))
      throw DomainError("branch_pow: branch point at r = 0");
    return 0.0;
  }
  const double n = std::floor(p);
  if (p == n && std::abs(n) < 64.0)
    return int_pow(r, static_cast<long>(n));
  return std::exp(p * cplx(std::log(std::abs(r)), cut.arg(r)));
}

cplx branch_pow(cplx r, const Rational &p, const BranchCut &cut) {
  if (p.is_integer()) {
    if (r == cplx{} && p.num < 0)
      throw DomainError("branch_pow: pole at r = 0");
    return int_pow(r, p.num);
  }
  return branch_pow(r, p.value(), cut);
}

Potential::Potential(std::vector<PotentialTerm> terms, BranchCut cut)
    : cut_(cut) {
  if (std::abs(cut.angle_hi - cut.angle_lo - two_pi) > 1e-12)
    throw std::invalid_argument("BranchCut: range must span exactly 2 pi");
  std::sort(terms.begin(), terms.end(),
            [](const auto &a, const auto &b) { return a.exponent < b.exponent; });
  for (const auto &t : terms) {
    if (!std::isfinite(t.coeff.real()) || !std::isfinite(t.coeff.imag()))
      throw std::invalid_argument("PotentialTerm: non-finite coefficient");
    if (t.coeff == cplx{})
      throw std::invalid_argument("PotentialTerm: zero coefficient");
    if (!terms_.empty() && terms_.back().exponent == t.exponent)
      terms_.back().coeff += t.coeff;
    else
      terms_.push_back(t);
  }
  std::erase_if(terms_, [](const auto &t) { return t.coeff == cplx{}; });
}

const PotentialTerm &Potential::top_term() const {
  if (terms_.empty())
    throw std::logic_error("Potential: no terms");
  return terms_.back();
}

cplx Potential::eval(cplx r) const { return eval_derivative(r, 0); }

cplx Potential::eval_derivative(cplx r, int n) const {
  if (n < 0)
    throw std::invalid_argument("eval_derivative: negative order");
  cplx sum{};
  for (const auto &t : terms_) {
    // p (p-1) ... (p-n+1), each factor exact in the rational representation
    double falling = 1.0;
    for (int i = 0; i < n; ++i)
      falling *= (t.exponent - i).value();
    if (falling == 0.0)
      continue;
    sum += t.coeff * falling * branch_pow(r, t.exponent - n, cut_);
  }
  return sum;
}

cplx Potential::taylor_coefficient(cplx r, int n) const {
  if (n < 0)
    throw std::invalid_argument("taylor_coefficient: negative order");
  cplx sum{};
  for (const auto &t : terms_) {
    double binom = 1.0;
    for (int i = 0; i < n; ++i)
      binom *= (t.exponent - i).value() / double(i + 1);
    if (binom == 0.0)
      continue;
    sum += t.coeff * binom * branch_pow(r, t.exponent - n, cut_);
  }
  return sum;
}

Potential Potential::ddt(double alpha) {
  std::vector<PotentialTerm> terms{{cplx(0.0, 1.0), Rational(3)}};
  if (alpha != 0.0)
    terms.push_back({-alpha * std::polar(1.0, std::numbers::pi / 4), Rational(1, 2)});
  return Potential(std::move(terms));
}

Potential Potential::coulomb(double A) {
  if (A == 0.0)
    throw std::invalid_argument("coulomb: A must be non-zero");
  return Potential({{cplx(0.0, A), Rational(-1)}});
}

Potential Potential::harmonic() { return Potential({{cplx(1.0, 0.0), Rational(2)}}); }

Potential Potential::preset(const std::string &spec) {
  static const std::regex with_arg(R"(\s*(ddt|coulomb)\s*\(\s*([-+0-9.eE]+)\s*\)\s*)");
  static const std::regex bare(R"(\s*harmonic\s*(\(\s*\))?\s*)");
  std::smatch m;
  if (std::regex_match(spec, m, with_arg)) {
    const double value = std::stod(m[2].str());
    return m[1] == "ddt" ? ddt(value) : coulomb(value);
  }
  if (std::regex_match(spec, bare))
    return harmonic();
  throw std::invalid_argument("unknown potential preset: " + spec);
}

std::string Potential::describe() const {
  std::ostringstream os;
  bool first = true;
  for (const auto &t : terms_) {
    if (!first)
      os << " + ";
    first = false;
    os << "(" << t.coeff.real() << (t.coeff.imag() < 0 ? "-" : "+")
       << std::abs(t.coeff.imag()) << "i) r^" << t.exponent.num;
    if (t.exponent.den != 1)
      os << "/" << t.exponent.den;
  }
  return os.str();
}

double ddt_threshold(double alpha) {
  return std::max((2.0 * alpha - 7.0) / 4.0, -0.5);
}

} // namespace pslet
