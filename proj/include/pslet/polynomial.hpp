#pragma once

#include <complex>
#include <vector>

namespace pslet {

// Dense polynomial in x, coefficients in ascending powers.
using Poly = std::vector<std::complex<double>>;

namespace poly {

Poly add(const Poly &a, const Poly &b);
Poly sub(const Poly &a, const Poly &b);
Poly mul(const Poly &a, const Poly &b);
Poly scale(const Poly &a, std::complex<double> s);
Poly derivative(const Poly &a);
// Coefficient of x^n, zero beyond the stored degree.
std::complex<double> coeff(const Poly &a, std::size_t n);
// a += b, growing a as needed.
void accumulate(Poly &a, const Poly &b, std::complex<double> s = 1.0);
// Coefficient-wise magnitude.
std::vector<double> magnitude(const Poly &a);

} // namespace poly
} // namespace pslet
