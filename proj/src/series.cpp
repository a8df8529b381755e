#include "pslet/series.hpp"
#include "pslet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pslet {

namespace {

cplx at(const Poly &p, int n) { return n < 0 ? cplx{} : poly::coeff(p, static_cast<std::size_t>(n)); }

// Bivariate series Σ_j P_j(x) ε^j truncated at ε^J.
using Series2 = std::vector<Poly>;

Series2 mul(const Series2 &a, const Series2 &b, int J) {
  Series2 r(J + 1);
  for (int i = 0; i <= J && i < int(a.size()); ++i)
    for (int j = 0; i + j <= J && j < int(b.size()); ++j)
      poly::accumulate(r[i + j], poly::mul(a[i], b[j]));
  return r;
}

Series2 dx(const Series2 &a) {
  Series2 r;
  for (const auto &p : a)
    r.push_back(poly::derivative(p));
  return r;
}

Series2 combine(const Series2 &a, const Series2 &b, double s) {
  Series2 r = a;
  if (r.size() < b.size())
    r.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    poly::accumulate(r[i], b[i], s);
  return r;
}

Series2 abs_series(const Series2 &a) {
  Series2 r;
  for (const auto &p : a) {
    Poly m(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
      m[i] = std::abs(p[i]);
    r.push_back(std::move(m));
  }
  return r;
}

} // namespace

ExpansionTables build_expansions(const Potential &pot, const LeadingOrder &lead, int n_max) {
  if (n_max < 2)
    throw std::invalid_argument("build_expansions: n_max must be at least 2");
  ExpansionTables t;
  t.r0 = lead.r0;
  t.omega = lead.omega;
  t.beta = lead.beta;
  t.lbar = lead.lbar;
  t.Q = lead.Q;
  t.n_max = n_max;

  const int J = t.half_orders();
  const cplx r0 = lead.r0;
  for (int n = 0; n <= J + 2; ++n) {
    const double sign = n % 2 ? -1.0 : 1.0;
    t.T.push_back(sign * (n + 1) / std::pow(r0, n + 2));
    t.B.push_back(t.T.back() + pot.taylor_coefficient(r0, n) / t.Q);
  }
  const double b = lead.beta;
  for (int n = 0; n <= J; ++n) {
    Poly v(n + 3);
    v[n + 2] += t.B[n + 2];
    v[n] += (2.0 * b + 1.0) * t.T[n];
    if (n >= 2)
      v[n - 2] += b * (b + 1.0) * t.T[n - 2];
    t.v.push_back(std::move(v));
  }
  t.eps0 = t.B[0] * t.lbar + (2.0 * b + 1.0) * t.T[0] + b * (b + 1.0) * t.T[0] / t.lbar;
  return t;
}

cplx RiccatiAnsatz::D(int m, int n) const {
  if (m <= 0 || n < 0 || n >= int(u.size()))
    return {};
  return at(u[n], 2 * m - 1);
}

cplx RiccatiAnsatz::C(int m, int n) const {
  if (m < 0 || n + 1 < 0 || n + 1 >= int(u.size()))
    return {};
  return at(u[n + 1], 2 * m);
}

cplx RiccatiAnsatz::a(int p, int n) const {
  if (p < 0 || p >= k || n < 0 || n >= int(f.size()))
    return {};
  return at(f[n], p);
}

HierarchySolution solve_hierarchy(const ExpansionTables &tables, int k, double beta, int n_max) {
  if (k < 0)
    throw std::invalid_argument("solve_hierarchy: k must be non-negative");
  if (n_max > tables.n_max)
    throw std::invalid_argument("solve_hierarchy: tables truncated below n_max");
  const int J = 2 * n_max + 2;
  const cplx omega = tables.omega;
  const auto &T = tables.T;
  const auto &B = tables.B;
  const double scale = std::abs(T[0]) + std::sqrt(std::abs(B[2]));
  if (std::abs(omega) < 1e-13 * scale)
    throw HierarchyDegeneracy("solve_hierarchy: omega vanishes", 0, k);

  HierarchySolution sol;
  auto &ans = sol.ansatz;
  ans.k = k;
  ans.n_max = n_max;

  // Order 0: harmonic ground factor and Hermite-like F_0.
  ans.u.push_back(Poly{0.0, -omega / 2.0});
  Poly F0(k + 1);
  F0[k] = 1.0;
  for (int p = k - 1; p >= 0; --p)
    F0[p] = double((p + 2) * (p + 1)) * at(F0, p + 2) / (double(p - k) * omega);
  ans.f.push_back(F0);
  std::vector<cplx> e{double(2 * k + 1) * omega / 2.0 + (2.0 * beta + 1.0) * T[0]};
  // q_b = -u_b' - Σ u_c u_{b-c} + v_b - e_b, filled as orders complete.
  std::vector<Poly> q{Poly{-double(k) * omega}};

  // Coefficient of x^s produced by μ x^m in F0(-u' + ωx u) - 2F0' u.
  auto column = [&](int s, int m) {
    return omega * at(F0, s - m - 1) - double(2 * s - m + 2) * at(F0, s - m + 1);
  };

  for (int j = 1; j <= J; ++j) {
    Poly R;
    // F_0 (v_j - Σ_{c=1}^{j-1} u_c u_{j-c})
    Poly known = tables.v[j];
    for (int c = 1; c < j; ++c)
      poly::accumulate(known, poly::mul(ans.u[c], ans.u[j - c]), -1.0);
    R = poly::mul(F0, known);
    for (int a = 1; a < j; ++a) {
      poly::accumulate(R, poly::mul(ans.f[a], q[j - a]));
      poly::accumulate(R, poly::mul(poly::derivative(ans.f[a]), ans.u[j - a]), -2.0);
    }

    const int deg = j + 1;
    if (int(R.size()) > k + deg + 2) {
      for (std::size_t s = k + deg + 2; s < R.size(); ++s)
        if (R[s] != cplx{})
          throw HierarchyDegeneracy("solve_hierarchy: residual degree exceeds ansatz", j, int(s));
    }
    Poly uj(deg + 1);
    for (int m = deg; m >= 0; --m) {
      const int s = k + m + 1;
      cplx acc = at(R, s);
      for (int mp = m + 1; mp <= deg; ++mp)
        acc += uj[mp] * column(s, mp);
      uj[m] = -acc / omega;
    }
    cplx ej = at(R, k);
    for (int m = 0; m <= deg; ++m)
      ej += uj[m] * column(k, m);

    Poly Fj(std::max(k, 1));
    for (int p = k - 1; p >= 0; --p) {
      cplx acc = at(R, p) - ej * F0[p] - double((p + 2) * (p + 1)) * at(Fj, p + 2);
      for (int m = 0; m <= deg; ++m)
        acc += uj[m] * column(p, m);
      const cplx pivot = double(p - k) * omega;
      if (std::abs(pivot) < 1e-13 * scale)
        throw HierarchyDegeneracy("solve_hierarchy: vanishing pivot", j, p);
      Fj[p] = -acc / pivot;
    }
    if (k == 0)
      Fj.assign(1, 0.0);

    ans.u.push_back(std::move(uj));
    ans.f.push_back(std::move(Fj));
    e.push_back(ej);

    Poly qj = poly::scale(poly::derivative(ans.u[j]), -1.0);
    for (int c = 0; c <= j; ++c)
      poly::accumulate(qj, poly::mul(ans.u[c], ans.u[j - c]), -1.0);
    poly::accumulate(qj, tables.v[j]);
    poly::accumulate(qj, Poly{-ej});
    q.push_back(std::move(qj));
  }

  sol.half_energy = e;
  sol.lambda.resize(n_max + 1);
  sol.lambda[0] = e[2] - beta * (beta + 1.0) * T[0];
  for (int n = 1; n <= n_max; ++n)
    sol.lambda[n] = e[2 * n + 2];
  return sol;
}

std::vector<double> riccati_residual(const ExpansionTables &tables, const HierarchySolution &sol) {
  const auto &ans = sol.ansatz;
  const int J = static_cast<int>(ans.u.size()) - 1;
  const Series2 U = ans.u;
  const Series2 F = ans.f;
  Series2 W(tables.v.begin(), tables.v.begin() + J + 1);
  Series2 L;
  for (const cplx ej : sol.half_energy)
    L.push_back(Poly{ej});

  // F (-U' - U² + W - Λ) - 2F'U - F''
  const Series2 bracket = combine(combine(combine(dx(U), mul(U, U, J), 1.0), W, -1.0), L, 1.0);
  const Series2 res = combine(combine(mul(F, bracket, J), mul(dx(F), U, J), 2.0), dx(dx(F)), 1.0);
  // same expression with every coefficient replaced by its magnitude
  const Series2 aU = abs_series(U), aF = abs_series(F);
  const Series2 abracket = combine(combine(combine(abs_series(dx(U)), mul(aU, aU, J), 1.0),
                                           abs_series(W), 1.0),
                                   abs_series(L), 1.0);
  const Series2 scale = combine(combine(mul(aF, abracket, J), mul(abs_series(dx(F)), aU, J), 2.0),
                                abs_series(dx(dx(F))), 1.0);

  std::vector<double> out(J + 1, 0.0);
  for (int j = 0; j <= J; ++j) {
    double r = 0.0, s = 0.0;
    for (const auto c : res[j])
      r = std::max(r, std::abs(c));
    for (const auto c : scale[j])
      s = std::max(s, std::abs(c));
    out[j] = s > 0.0 ? r / s : r;
  }
  return out;
}

cplx EnergySeries::head() const { return lbar * lbar * E[0] + lbar * E[1]; }

cplx EnergySeries::total(int M) const {
  if (M < -2 || M > n_max())
    throw std::out_of_range("EnergySeries::total: truncation outside the stored series");
  cplx sum{};
  for (int n = -2; n <= M; ++n)
    sum += coefficient(n) * std::pow(lbar, -n);
  return sum;
}

std::vector<cplx> EnergySeries::tail() const { return {E.begin() + 2, E.end()}; }

EnergySeries assemble(const LeadingOrder &lead, const std::vector<cplx> &lambda) {
  if (lambda.empty())
    throw std::invalid_argument("assemble: empty λ table");
  EnergySeries s;
  s.lbar = lead.lbar;
  s.mode = lead.mode;
  s.lambda = lambda;
  s.E = {lead.E_m2, lead.E_m1, lead.beta * (lead.beta + 1.0) / (lead.r0 * lead.r0) + lambda[0]};
  for (std::size_t n = 1; n < lambda.size(); ++n)
    s.E.push_back(lambda[n]);
  return s;
}

EnergySeries expand(const Potential &pot, const LeadingOrder &lead, int n_max) {
  const auto tables = build_expansions(pot, lead, n_max);
  const auto sol = solve_hierarchy(tables, lead.k, lead.beta, n_max);
  return assemble(lead, sol.lambda);
}

} // namespace pslet
