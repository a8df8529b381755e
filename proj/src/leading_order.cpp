#include "pslet/leading_order.hpp"
#include "pslet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace pslet {

namespace {

constexpr int newton_max_iterations = 200;
constexpr double dedup_tolerance = 1e-9;
constexpr double reality_tolerance = 1e-9;

// f(r) = r³V'(r)/2 - l̄² and its derivative.
struct Stationarity {
  cplx f;
  cplx df;
};

Stationarity stationarity(const Potential &pot, cplx r, double Q) {
  const cplx d1 = pot.eval_derivative(r, 1);
  const cplx d2 = pot.eval_derivative(r, 2);
  const cplx r2 = r * r;
  return {0.5 * r2 * r * d1 - Q, 0.5 * (3.0 * r2 * d1 + r2 * r * d2)};
}

struct NewtonResult {
  cplx root;
  double residual;
  bool converged;
};

NewtonResult newton(const Potential &pot, cplx r, double Q) {
  double best = std::numeric_limits<double>::infinity();
  cplx best_r = r;
  for (int it = 0; it < newton_max_iterations; ++it) {
    Stationarity s;
    try {
      s = stationarity(pot, r, Q);
    } catch (const DomainError &) {
      return {best_r, best, false};
    }
    const double res = std::abs(s.f) / Q;
    if (res < best) {
      best = res;
      best_r = r;
    }
    if (s.df == cplx{} || !std::isfinite(res))
      return {best_r, best, false};
    cplx step = s.f / s.df;
    // keep away from the origin, where the centrifugal balance breaks down
    if (std::abs(step) > 0.5 * std::abs(r))
      step *= 0.5 * std::abs(r) / std::abs(step);
    r -= step;
    if (std::abs(step) <= 1e-15 * std::abs(r) || res < 1e-15) {
      // one polishing step after the update
      try {
        const auto p = stationarity(pot, r, Q);
        if (p.df != cplx{})
          r -= p.f / p.df;
        const double final_res = std::abs(stationarity(pot, r, Q).f) / Q;
        return {r, final_res, final_res < 1e-10};
      } catch (const DomainError &) {
        return {best_r, best, false};
      }
    }
  }
  return {best_r, best, best < 1e-10};
}

bool admissible(const Potential &pot, cplx r0, double Q) {
  const cplx d1 = pot.eval_derivative(r0, 1);
  if (d1 == cplx{})
    return false;
  const cplx z = 0.5 * r0 * r0 * r0 * d1;
  if (z.real() <= 0.0 || std::abs(z.imag()) > reality_tolerance * std::abs(z))
    return false;
  if (std::abs(z - Q) > reality_tolerance * Q)
    return false;
  const cplx omega2 = 4.0 * (3.0 + r0 * pot.eval_derivative(r0, 2) / d1) / (r0 * r0 * r0 * r0);
  return omega2.real() > 0.0 && std::abs(omega2.imag()) <= 1e-8 * std::abs(omega2);
}

bool is_real(cplx r) { return std::abs(r.imag()) <= 1e-8 * std::abs(r); }
bool is_imaginary(cplx r) { return std::abs(r.real()) <= 1e-8 * std::abs(r); }

double mode_beta(const Classification &c, BetaMode mode) {
  switch (mode) {
  case BetaMode::plus:
    return c.beta_plus;
  case BetaMode::minus:
    return c.beta_minus;
  case BetaMode::zero:
    break;
  }
  return 0.0;
}

// Pick the minimum paired with the mode; throws if the family is empty.
cplx select_root(const std::vector<cplx> &roots, BetaMode mode) {
  auto find = [&](auto pred) { return std::find_if(roots.begin(), roots.end(), pred); };
  auto it = roots.end();
  switch (mode) {
  case BetaMode::plus:
    it = find(is_real);
    break;
  case BetaMode::minus:
    it = find(is_imaginary);
    break;
  case BetaMode::zero:
    it = find(is_imaginary);
    if (it == roots.end())
      it = find(is_real);
    if (it == roots.end())
      it = roots.begin();
    break;
  }
  if (it == roots.end())
    throw NoAdmissibleMinimum("no " + std::string(mode == BetaMode::plus ? "real" : "imaginary") +
                              " minimum for beta mode " + to_string(mode));
  return *it;
}

// Roots for l̄, trying the continuation seed first.
cplx track_root(const Potential &pot, double lbar, BetaMode mode, std::optional<cplx> guess) {
  if (guess) {
    const cplx seed[] = {*guess};
    try {
      return select_root(solve_r0(pot, lbar, seed), mode);
    } catch (const Error &) {
      // fall through to the full seed ring
    }
  }
  try {
    return select_root(solve_r0(pot, lbar), mode);
  } catch (const Error &) {
    // below the dominant-balance scale a lower term sets |r0|
  }
  const auto &cut = pot.cut();
  std::vector<cplx> seeds;
  for (const auto &term : pot.terms()) {
    const double p = term.exponent.value();
    if (p <= -2.0 || p == 0.0)
      continue;
    const double base = std::pow(2.0 * lbar * lbar / std::abs(p * term.coeff), 1.0 / (p + 2.0));
    for (const double f : {0.5, 1.0, 1.5, 2.0, 3.0}) {
      for (int j = 0; j < 32; ++j) {
        const double angle = cut.angle_lo + (j + 1) * (cut.angle_hi - cut.angle_lo) / 32;
        seeds.push_back(std::polar(f * base, angle));
      }
    }
  }
  return select_root(solve_r0(pot, lbar, seeds), mode);
}

} // namespace

double StateSpec::ell_d() const {
  if (quasi_parity)
    return -0.5 + quasi_parity->q * std::abs(quasi_parity->alpha_o);
  return ell + 0.5 * (dim - 3);
}

std::string to_string(BetaMode mode) {
  switch (mode) {
  case BetaMode::zero:
    return "zero";
  case BetaMode::plus:
    return "plus";
  case BetaMode::minus:
    return "minus";
  }
  return "?";
}

BetaMode beta_mode_from_string(const std::string &name) {
  if (name == "zero")
    return BetaMode::zero;
  if (name == "plus")
    return BetaMode::plus;
  if (name == "minus")
    return BetaMode::minus;
  throw std::invalid_argument("unknown beta mode: " + name);
}

std::vector<cplx> default_seeds(const Potential &pot, double lbar) {
  const auto &top = pot.top_term();
  const double p = top.exponent.value();
  const double radius = std::pow(2.0 * lbar * lbar / (3.0 * std::abs(top.coeff)), 1.0 / (p + 2.0));
  const auto &cut = pot.cut();
  std::vector<cplx> seeds;
  constexpr int count = 16;
  for (int j = 0; j < count; ++j) {
    const double angle = cut.angle_lo + (j + 0.5) * (cut.angle_hi - cut.angle_lo) / count;
    seeds.push_back(std::polar(radius, angle));
  }
  return seeds;
}

std::vector<cplx> solve_r0(const Potential &pot, double lbar) {
  const auto seeds = default_seeds(pot, lbar);
  return solve_r0(pot, lbar, seeds);
}

std::vector<cplx> solve_r0(const Potential &pot, double lbar, std::span<const cplx> seeds) {
  if (!(lbar > 0.0))
    throw InvalidShift("solve_r0: l̄ must be positive", lbar);
  if (seeds.empty())
    throw std::invalid_argument("solve_r0: no seeds");
  const double Q = lbar * lbar;
  std::vector<cplx> roots;
  double best_residual = std::numeric_limits<double>::infinity();
  for (const cplx seed : seeds) {
    const auto res = newton(pot, seed, Q);
    best_residual = std::min(best_residual, res.residual);
    if (!res.converged)
      continue;
    const bool seen = std::any_of(roots.begin(), roots.end(), [&](cplx r) {
      return std::abs(r - res.root) <= dedup_tolerance * std::abs(res.root);
    });
    if (!seen)
      roots.push_back(res.root);
  }
  if (roots.empty())
    throw RootFailure("solve_r0: no seed converged", best_residual);

  std::vector<cplx> kept;
  for (const cplx r : roots)
    if (admissible(pot, r, Q))
      kept.push_back(r);
  if (kept.empty())
    throw NoAdmissibleMinimum("solve_r0: no stationary point with real l̄ and real positive omega^2");

  const auto &cut = pot.cut();
  std::sort(kept.begin(), kept.end(), [&](cplx a, cplx b) {
    const double aa = cut.arg(a), ab = cut.arg(b);
    if (std::abs(aa - ab) > 1e-9)
      return aa < ab;
    return std::abs(a) < std::abs(b);
  });
  return kept;
}

Classification classify(const Potential &pot, cplx r0, int k) {
  const cplx d1 = pot.eval_derivative(r0, 1);
  if (d1 == cplx{})
    throw DegenerateCurvature("classify: V'(r0) = 0");
  const cplx omega_sq = 3.0 + r0 * pot.eval_derivative(r0, 2) / d1;
  if (omega_sq.real() < 0.0 && std::abs(omega_sq.imag()) <= 1e-12 * std::abs(omega_sq))
    throw DegenerateCurvature("classify: 3 + r0 V''/V' is negative");
  cplx Omega = std::sqrt(omega_sq);
  if (Omega.real() == 0.0 && Omega.imag() < 0.0)
    Omega = -Omega;
  cplx omega = 2.0 * Omega / (r0 * r0);
  if (omega.real() < 0.0)
    omega = -omega;
  if (omega.real() == 0.0)
    throw DegenerateCurvature("classify: omega is purely imaginary");
  const double spread = (2 * k + 1) * Omega.real();
  return {Omega, omega, -0.5 * (1.0 + spread), -0.5 * (1.0 - spread)};
}

LeadingOrder self_consistent(const Potential &pot, const StateSpec &state, BetaMode mode,
                             const SelfConsistentOptions &options) {
  if (state.k < 0)
    throw std::invalid_argument("self_consistent: k must be non-negative");
  const double ell_d = state.ell_d();
  constexpr double min_lbar = 1e-12;

  LeadingOrder lead;
  lead.mode = mode;
  lead.k = state.k;
  lead.ell_d = ell_d;

  double beta = 0.0;
  cplx r0;
  if (mode == BetaMode::zero) {
    const double lbar = std::abs(ell_d);
    if (lbar < min_lbar)
      throw InvalidShift("self_consistent: l̄ = ℓ_d vanishes", lbar);
    r0 = track_root(pot, lbar, mode, std::nullopt);
  } else {
    // Pure-power estimate Ω² = p_top + 2 as the starting shift.
    const double p_top = pot.top_term().exponent.value();
    const double omega0 = std::sqrt(std::max(p_top + 2.0, 0.25));
    const double spread0 = (2 * state.k + 1) * omega0;
    beta = mode == BetaMode::plus ? -0.5 * (1.0 + spread0) : -0.5 * (1.0 - spread0);

    std::vector<double> orbit{beta};
    std::optional<cplx> guess;
    double last_delta = 0.0;
    int flips = 0;
    bool converged = false;
    for (int it = 0; it < options.max_iterations; ++it) {
      const double lbar = std::abs(ell_d - beta);
      if (lbar < min_lbar)
        throw InvalidShift("self_consistent: l̄ = ℓ_d - β vanishes", lbar);
      r0 = track_root(pot, lbar, mode, guess);
      guess = r0;
      const double next = mode_beta(classify(pot, r0, state.k), mode);
      const double delta = next - beta;
      lead.iterations = it + 1;
      if (std::abs(delta) < options.tolerance) {
        beta = next;
        converged = true;
        break;
      }
      if (last_delta != 0.0 && (delta > 0) != (last_delta > 0))
        ++flips;
      last_delta = delta;
      beta = flips >= 2 ? 0.5 * (beta + next) : next;
      orbit.push_back(beta);
    }
    if (!converged) {
      std::ostringstream os;
      os << "self_consistent: β fixed point not converged after " << options.max_iterations
         << " iterations (last β = " << beta << ")";
      throw FixedPointDivergence(os.str(), std::move(orbit));
    }
    const double lbar = std::abs(ell_d - beta);
    if (lbar < min_lbar)
      throw InvalidShift("self_consistent: l̄ = ℓ_d - β vanishes", lbar);
    r0 = track_root(pot, lbar, mode, r0);
  }

  const auto cls = classify(pot, r0, state.k);
  lead.r0 = r0;
  lead.Omega = cls.Omega;
  lead.omega = cls.omega;
  lead.beta = beta;
  lead.lbar = std::abs(ell_d - beta);
  lead.reflected = ell_d - beta < 0.0;
  lead.Q = lead.lbar * lead.lbar;
  const cplx r0_sq = r0 * r0;
  lead.E_m2 = 1.0 / r0_sq + pot.eval(r0) / lead.Q;
  lead.E_m1 = (2.0 * beta + 1.0) / r0_sq + double(2 * state.k + 1) * cls.omega / 2.0;
  return lead;
}

double cubic_Z(double delta) {
  auto f = [delta](double Z) { return 1.0 - Z - delta * std::sqrt(Z / 6.0); };
  double lo = 0.0, hi = 1.0;
  if (delta < 0.0) {
    lo = 1.0;
    hi = 2.0;
    while (f(hi) > 0.0)
      hi *= 2.0;
  }
  if (delta == 0.0)
    return 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double cubic_energy_beta0(int k, double ell_d, double Z) {
  if (!(Z > 0.0))
    throw std::invalid_argument("cubic_energy_beta0: Z must be positive");
  if (ell_d <= 0.0)
    throw InvalidShift("cubic_energy_beta0: requires ℓ_d > 0 (l̄ = ℓ_d)", ell_d);
  const double G = std::sqrt(2.0 / 3.0) * ell_d;
  const double first = std::sqrt(15.0 * (1.0 + Z) / 4.0) * (2 * k + 1) - std::sqrt(1.5);
  return std::pow(Z, -0.4) * (std::pow(G, 1.2) * (5.0 * Z - 7.5) + std::pow(G, 0.2) * first);
}

double cubic_energy_betaminus(int k, double ell_d, double Z) {
  if (!(Z > 0.0))
    throw std::invalid_argument("cubic_energy_betaminus: Z must be positive");
  const double Gs =
      std::sqrt(2.0 / 3.0) * (ell_d + 0.5 - (2 * k + 1) * std::sqrt(5.0 * (1.0 + Z) / 8.0));
  if (std::abs(Gs) < 1e-14)
    throw InvalidShift("cubic_energy_betaminus: G_s vanishes", Gs);
  // (G_s⁶/Z²)^{1/5} is real for either sign of G_s
  return std::pow(Gs * Gs, 0.6) * std::pow(Z, -0.4) * (5.0 * Z - 7.5);
}

double coulomb_energy(double A, const StateSpec &state) {
  if (A == 0.0)
    throw std::invalid_argument("coulomb_energy: A must be non-zero");
  if (state.quasi_parity) {
    const auto &qp = *state.quasi_parity;
    const double denom = 2 * state.k + 1 - 2.0 * qp.q * std::abs(qp.alpha_o);
    if (std::abs(denom) < 1e-12)
      throw FlownAway("coulomb_energy: 2k + 1 = 2q|α_o|, the state flies away");
    return A * A / (denom * denom);
  }
  const double gap = state.k - state.ell_d();
  if (std::abs(gap) < 1e-12)
    throw FlownAway("coulomb_energy: k = ℓ_d, the state flies away");
  return A * A / (4.0 * gap * gap);
}

double harmonic_energy(int k, double ell_d, int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("harmonic_energy: sign must be +1 or -1");
  return 4.0 * k + 2.0 + sign * (2.0 * ell_d + 1.0);
}

} // namespace pslet
