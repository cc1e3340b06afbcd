#ifndef PTQM_BARGMANN_HPP
#define PTQM_BARGMANN_HPP

#include "ptqm/grid.hpp"
#include "ptqm/types.hpp"

namespace ptqm {

/// Entire function f(z) = sum_n c_n z^n / sqrt(n!) in the Bargmann space
/// with Gaussian measure pi^{-1} e^{-|z|^2}; the monomials z^n/sqrt(n!)
/// are orthonormal, so the Bargmann norm is just the l2 norm of c.
struct BargmannFunction {
  cvec coeffs;

  int n_max() const { return static_cast<int>(coeffs.size()) - 1; }
  double norm() const { return coeffs.norm(); }
  complexd eval(complexd z) const;
};

/// Segal-Bargmann transform by Hermite expansion: c_n = <h_n, f> on the
/// grid, so B(h_n) = z^n/sqrt(n!). Equivalent to integrating the Gaussian
/// kernel pi^{-1/4} exp(-z^2/2 + sqrt(2) z x - x^2/2) against f; the
/// kernel route is kept as a cross-check in the tests.
///
/// Throws unresolved_truncation when the grid cannot resolve h_{n_max}
/// (classical turning point too close to the boundary, or oscillation
/// finer than the spacing), which is when the coefficient tail stops
/// converging.
BargmannFunction segal_bargmann(const WaveFunction& f, int n_max);

/// <f, g>_mu = sum conj(c_n) d_n.
complexd bargmann_inner(const BargmannFunction& f, const BargmannFunction& g);

/// Harmonic oscillator hbar*omega (z d/dz + 1/2) acting on coefficients:
/// c_n -> omega (n + 1/2) c_n (hbar = 1).
BargmannFunction bargmann_number_apply(const BargmannFunction& f, double omega);

}  // namespace ptqm

#endif
