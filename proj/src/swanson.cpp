#include "ptqm/swanson.hpp"

#include <cmath>
#include <numbers>

#include "ptqm/errors.hpp"
#include "ptqm/transforms.hpp"

namespace ptqm {

SwansonDerived map_to_harmonic(const SwansonParams& p) {
  const double gap = p.omega - p.alpha - p.beta;
  if (gap == 0.0)
    throw free_particle_limit("omega - alpha - beta = 0 maps to a free particle");

  SwansonDerived d;
  d.mass = p.hbar / (gap * p.xi0 * p.xi0);
  d.big_omega = std::sqrt(complexd(p.omega * p.omega - 4.0 * p.alpha * p.beta, 0.0));
  d.theta = std::arg(d.big_omega);
  d.k = d.mass * d.big_omega * d.big_omega;

  // x-coefficients of A and A^dag after P = p + i hbar l x is substituted,
  // with hbar l / m = alpha - beta.
  const double ab = p.alpha - p.beta;
  const double mod = std::abs(d.big_omega);
  const complexd ehalf = std::polar(1.0, 0.5 * d.theta);
  d.s = ehalf - ab * std::conj(ehalf) / mod;
  d.s_tilde = std::conj(ehalf) + ab * ehalf / mod;
  return d;
}

OperatorMatrix swanson_fock_matrix(const SwansonParams& p, int n_trunc) {
  if (n_trunc < 10) throw error("swanson_fock_matrix: truncation below 10 is meaningless");
  cmat h = cmat::Zero(n_trunc, n_trunc);
  for (int n = 0; n < n_trunc; ++n) {
    h(n, n) = p.hbar * p.omega * (n + 0.5);
    if (n >= 2) h(n - 2, n) = p.hbar * p.alpha * std::sqrt(double(n) * (n - 1));
    if (n + 2 < n_trunc) h(n + 2, n) = p.hbar * p.beta * std::sqrt(double(n + 1) * (n + 2));
  }
  return {Basis::fock, std::move(h)};
}

complexd swanson_analytic_spectrum(const SwansonParams& p, int n) {
  const complexd omega_eff = std::sqrt(complexd(p.omega * p.omega - 4.0 * p.alpha * p.beta, 0.0));
  return p.hbar * omega_eff * (n + 0.5);
}

XPCoefficients swanson_xp_coefficients(const SwansonParams& p) {
  XPCoefficients c;
  c.c_xx = p.hbar * (p.omega + p.alpha + p.beta) / (2.0 * p.xi0 * p.xi0);
  c.c_pp = (p.omega - p.alpha - p.beta) * p.xi0 * p.xi0 / (2.0 * p.hbar);
  c.c_xp = complexd(0.0, p.alpha - p.beta);
  c.c_const = p.hbar * (p.alpha - p.beta) / 2.0;
  return c;
}

OperatorMatrix assemble_swanson_grid(const SwansonParams& p, const Grid& grid) {
  const XPCoefficients c = swanson_xp_coefficients(p);
  const int n = grid.n;
  const complexd i(0.0, 1.0);

  cmat x = cmat::Zero(n, n);
  for (int j = 0; j < n; ++j) x(j, j) = grid.node(j);

  cmat pmat = cmat::Zero(n, n);  // -i hbar d/dx, central difference
  for (int j = 0; j < n; ++j) {
    if (j > 0) pmat(j, j - 1) = i * p.hbar / (2.0 * grid.h);
    if (j + 1 < n) pmat(j, j + 1) = -i * p.hbar / (2.0 * grid.h);
  }

  cmat p2 = cmat::Zero(n, n);  // hbar^2 times the 3-point stencil
  const double w = p.hbar * p.hbar / (grid.h * grid.h);
  for (int j = 0; j < n; ++j) {
    p2(j, j) = 2.0 * w;
    if (j > 0) p2(j, j - 1) = -w;
    if (j + 1 < n) p2(j, j + 1) = -w;
  }

  cmat h = c.c_xx * x * x + c.c_pp * p2 + c.c_xp * x * pmat +
           c.c_const * cmat::Identity(n, n);
  return {Basis::position, std::move(h)};
}

BogoliubovMatrix bogoliubov(double theta) {
  const complexd i(0.0, 1.0);
  BogoliubovMatrix b;
  b.theta = theta;
  b.m(0, 0) = std::cos(0.5 * theta);
  b.m(0, 1) = i * std::sin(0.5 * theta);
  b.m(1, 0) = -i * std::sin(0.5 * theta);
  b.m(1, 1) = std::cos(0.5 * theta);
  return b;
}

LadderAction ladder_action(int n, double theta) {
  if (n < 0) throw error("ladder_action: n must be >= 0");
  const complexd i(0.0, 1.0);
  const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
  LadderAction a;
  a.a_to_lower = n > 0 ? complexd(c * std::sqrt(double(n))) : complexd(0.0);
  a.a_to_upper = i * s * std::sqrt(double(n + 1));
  a.adag_to_upper = c * std::sqrt(double(n + 1));
  a.adag_to_lower = n > 0 ? -i * s * std::sqrt(double(n)) : complexd(0.0);
  return a;
}

LadderMatrices ladder_matrices(double theta, int n_trunc) {
  cmat a = cmat::Zero(n_trunc, n_trunc), ad = cmat::Zero(n_trunc, n_trunc);
  for (int n = 0; n < n_trunc; ++n) {
    const LadderAction act = ladder_action(n, theta);
    if (n > 0) {
      a(n - 1, n) = act.a_to_lower;
      ad(n - 1, n) = act.adag_to_lower;
    }
    if (n + 1 < n_trunc) {
      a(n + 1, n) = act.a_to_upper;
      ad(n + 1, n) = act.adag_to_upper;
    }
  }
  return {{Basis::fock, std::move(a)}, {Basis::fock, std::move(ad)}};
}

LadderMatrices pseudo_boson_ops(const SwansonParams& p, int n_trunc) {
  const SwansonDerived d = map_to_harmonic(p);
  const double mod = std::abs(d.big_omega);
  const complexd ehalf = std::polar(1.0, 0.5 * d.theta);
  const double pref = 0.5 * std::sqrt(d.mass * mod / p.hbar);
  const complexd u_minus = p.hbar * std::conj(ehalf) / (d.mass * mod * p.xi0);
  const complexd u_plus = p.hbar * ehalf / (d.mass * mod * p.xi0);

  // A      = pref [ (s xi0 + u_minus) a + (s xi0 - u_minus) a^dag ]
  // A^dag  = pref [ (st xi0 - u_plus) a + (st xi0 + u_plus) a^dag ]
  const complexd ca = pref * (d.s * p.xi0 + u_minus);
  const complexd cad = pref * (d.s * p.xi0 - u_minus);
  const complexd ta = pref * (d.s_tilde * p.xi0 - u_plus);
  const complexd tad = pref * (d.s_tilde * p.xi0 + u_plus);

  cmat a = cmat::Zero(n_trunc, n_trunc), adag = cmat::Zero(n_trunc, n_trunc);
  for (int n = 0; n < n_trunc; ++n) {
    const double dn = std::sqrt(double(n));       // a: |n> -> sqrt(n) |n-1>
    const double up = std::sqrt(double(n + 1));   // a^dag: |n> -> sqrt(n+1) |n+1>
    if (n > 0) {
      a(n - 1, n) += ca * dn;
      adag(n - 1, n) += ta * dn;
    }
    if (n + 1 < n_trunc) {
      a(n + 1, n) += cad * up;
      adag(n + 1, n) += tad * up;
    }
  }
  return {{Basis::fock, std::move(a)}, {Basis::fock, std::move(adag)}};
}

WeakFormPair potential_ft_weak(const SwansonParams& p, const TestFunction& testfn,
                               const Grid& grid) {
  if (!testfn.has_second_derivative)
    throw error("potential_ft_weak: test function must carry its exact second derivative at 0");
  const SwansonDerived d = map_to_harmonic(p);
  const double mod2 = std::abs(d.big_omega) * std::abs(d.big_omega);
  const complexd phase = std::polar(1.0, 2.0 * d.theta);

  WaveFunction g;
  g.grid = grid;
  g.space = Space::position;
  g.samples = cvec(grid.n);
  for (int i = 0; i < grid.n; ++i) g.samples[i] = testfn.f(grid.node(i));

  const WaveFunction gx = fourier(g, FourierConvention::analyst);
  complexd quad = 0.0;
  for (int i = 0; i < grid.n; ++i) {
    const double w = (i == 0 || i == grid.n - 1) ? 0.5 : 1.0;
    const double x = gx.grid.node(i);
    quad += w * x * x * gx.samples[i];
  }
  quad *= gx.grid.h;

  WeakFormPair out;
  out.lhs = 0.5 * d.mass * mod2 * phase * quad;
  out.rhs = -std::numbers::pi * d.mass * mod2 * phase * testfn.second_derivative_at_zero;
  return out;
}

SwansonBetaScan swanson_beta_scan(double omega, double alpha, const std::vector<double>& betas) {
  SwansonBetaScan out;
  out.table.reserve(betas.size());
  const auto max_imag = [&](double beta) {
    SwansonParams p{omega, alpha, beta, 1.0, 1.0};
    double worst = 0.0;
    for (int n = 0; n < 10; ++n)
      worst = std::max(worst, std::abs(swanson_analytic_spectrum(p, n).imag()));
    return worst;
  };
  for (const double b : betas) out.table.emplace_back(b, max_imag(b));

  constexpr double tol = 1e-12;
  for (std::size_t i = 0; i + 1 < out.table.size(); ++i) {
    if (out.table[i].second <= tol && out.table[i + 1].second > tol) {
      double lo = out.table[i].first, hi = out.table[i + 1].first;
      while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        (max_imag(mid) > tol ? hi : lo) = mid;
      }
      out.threshold = 0.5 * (lo + hi);
      break;
    }
  }
  return out;
}

}  // namespace ptqm
