#ifndef PTQM_SWANSON_HPP
#define PTQM_SWANSON_HPP

#include <functional>
#include <optional>
#include <vector>

#include "ptqm/grid.hpp"
#include "ptqm/types.hpp"

namespace ptqm {

/// H(omega, alpha, beta) = hbar omega (a^dag a + 1/2) + hbar alpha a^2
///                       + hbar beta a^dag^2,
/// non-Hermitian for alpha != beta. xi0 is the characteristic length in
/// a = (x/xi0 + i xi0 p / hbar)/sqrt(2); spectra are xi0-independent.
struct SwansonParams {
  double omega = 1.0;
  double alpha = 0.0;
  double beta = 0.0;
  double xi0 = 1.0;
  double hbar = 1.0;
};

/// Quantities of the oscillator mapping H = P^2/(2m) + k X^2/2 with
/// X = x, P = p + i hbar (alpha-beta) x / ((omega-alpha-beta) xi0^2).
///
/// big_omega is the principal square root of omega^2 - 4 alpha beta and
/// k = m big_omega^2; theta = arg(big_omega) vanishes exactly when the
/// reality condition omega^2 - 4 alpha beta >= 0 holds.
///
/// s and s_tilde are the x-coefficients of A and A^dag once P is
/// eliminated: s = e^{i theta/2} - (alpha-beta) e^{-i theta/2}/|Omega|,
/// s_tilde = e^{-i theta/2} + (alpha-beta) e^{i theta/2}/|Omega|. Using s
/// in both places does not close the commutator [A, A^dag]; the pair
/// (s, s_tilde) does.
struct SwansonDerived {
  double mass = 0.0;
  complexd big_omega;
  double theta = 0.0;
  complexd k;
  complexd s;
  complexd s_tilde;
};

/// Throws free_particle_limit when omega - alpha - beta = 0.
SwansonDerived map_to_harmonic(const SwansonParams& p);

/// Truncated Fock matrix: diagonal hbar omega (n + 1/2), entry (n-2, n)
/// hbar alpha sqrt(n(n-1)), entry (n+2, n) hbar beta sqrt((n+1)(n+2)).
OperatorMatrix swanson_fock_matrix(const SwansonParams& p, int n_trunc);

/// hbar Omega (n + 1/2), principal branch.
complexd swanson_analytic_spectrum(const SwansonParams& p, int n);

/// Coefficients of H = c_xx x^2 + c_pp p^2 + c_xp (x p) + c_const.
struct XPCoefficients {
  complexd c_xx, c_pp, c_xp, c_const;
};

XPCoefficients swanson_xp_coefficients(const SwansonParams& p);

/// Grid realization of the x-p form (x diagonal, p by central difference,
/// p^2 by the 3-point stencil); cross-representation check against the
/// Fock matrix.
OperatorMatrix assemble_swanson_grid(const SwansonParams& p, const Grid& grid);

/// M relating (A, A^dag)^T = M (b, b^dag)^T for Omega = |Omega| e^{i theta}.
struct BogoliubovMatrix {
  double theta = 0.0;
  Eigen::Matrix2cd m;

  complexd det() const { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }
};

/// [[cos(theta/2), i sin(theta/2)], [-i sin(theta/2), cos(theta/2)]];
/// det M = cos(theta).
BogoliubovMatrix bogoliubov(double theta);

/// Ladder actions on the mapped eigenvectors:
///   A |n>     = cos(theta/2) sqrt(n)   |n-1> + i sin(theta/2) sqrt(n+1) |n+1>
///   A^dag |n> = cos(theta/2) sqrt(n+1) |n+1> - i sin(theta/2) sqrt(n)   |n-1>
struct LadderAction {
  complexd a_to_lower, a_to_upper;        // A: coefficients on |n-1>, |n+1>
  complexd adag_to_upper, adag_to_lower;  // A^dag: coefficients on |n+1>, |n-1>
};

LadderAction ladder_action(int n, double theta);

struct LadderMatrices {
  OperatorMatrix a, adag;
};

/// Truncated matrices assembled from ladder_action rows; on interior rows
/// [A, A^dag] = cos(theta) * I exactly (= I at theta = 0).
LadderMatrices ladder_matrices(double theta, int n_trunc);

/// Pseudo-boson pair in the Fock basis of a, a^dag, built from the
/// (s, s_tilde) coefficient form. A^dag is not the adjoint of A for
/// alpha != beta, yet [A, A^dag] = cos(theta) I on interior rows.
LadderMatrices pseudo_boson_ops(const SwansonParams& p, int n_trunc);

/// Smooth rapidly-decaying test function together with its exact second
/// derivative at 0; the weak-form pairing refuses to differentiate
/// numerically.
struct TestFunction {
  std::function<double(double)> f;
  double second_derivative_at_zero = 0.0;
  bool has_second_derivative = false;

  static TestFunction make(std::function<double(double)> f, double d2_at_zero) {
    return {std::move(f), d2_at_zero, true};
  }
};

struct WeakFormPair {
  complexd lhs, rhs;
};

/// Weak form of Vt(P) = -pi m |Omega|^2 e^{2 i theta} delta''(P):
///   lhs = (m |Omega|^2 / 2) e^{2 i theta} int X^2 F[testfn](X) dX
///         (analyst-convention transform, trapezoid quadrature),
///   rhs = -pi m |Omega|^2 e^{2 i theta} testfn''(0).
WeakFormPair potential_ft_weak(const SwansonParams& p, const TestFunction& testfn,
                               const Grid& grid = Grid::make(12.0, 601));

struct SwansonBetaScan {
  std::vector<std::pair<double, double>> table;  // (beta, max |Im E_n|, n < 10)
  std::optional<double> threshold;
};

/// Reality-loss scan in beta at fixed omega, alpha through the analytic
/// spectrum; the threshold sits at beta = omega^2/(4 alpha) exactly.
SwansonBetaScan swanson_beta_scan(double omega, double alpha, const std::vector<double>& betas);

}  // namespace ptqm

#endif
