#include "pslet/polynomial.hpp"

#include <algorithm>

namespace pslet::poly {

Poly add(const Poly &a, const Poly &b) {
  Poly r = a;
  accumulate(r, b);
  return r;
}

Poly sub(const Poly &a, const Poly &b) {
  Poly r = a;
  accumulate(r, b, -1.0);
  return r;
}

Poly mul(const Poly &a, const Poly &b) {
  if (a.empty() || b.empty())
    return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == std::complex<double>{})
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] += a[i] * b[j];
  }
  return r;
}

Poly scale(const Poly &a, std::complex<double> s) {
  Poly r = a;
  for (auto &c : r)
    c *= s;
  return r;
}

Poly derivative(const Poly &a) {
  if (a.size() <= 1)
    return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i)
    r[i - 1] = double(i) * a[i];
  return r;
}

std::complex<double> coeff(const Poly &a, std::size_t n) { return n < a.size() ? a[n] : 0.0; }

void accumulate(Poly &a, const Poly &b, std::complex<double> s) {
  if (a.size() < b.size())
    a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    a[i] += s * b[i];
}

std::vector<double> magnitude(const Poly &a) {
  std::vector<double> m(a.size());
  std::transform(a.begin(), a.end(), m.begin(), [](auto c) { return std::abs(c); });
  return m;
}

} // namespace pslet::poly
