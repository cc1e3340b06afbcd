// Test-only oracles, independent of the library code paths they check.
#ifndef PTQM_TESTS_ORACLES_HPP
#define PTQM_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <numbers>

#include "ptqm/bargmann.hpp"
#include "ptqm/grid.hpp"
#include "ptqm/types.hpp"

namespace oracles {

using ptqm::complexd;

// Bargmann inner product by brute-force polar quadrature of
//   pi^-1 int conj(f(z)) g(z) e^{-|z|^2} dA,
// z = sqrt(t) e^{i phi}: uniform phi rule (exact for trigonometric
// polynomials) times composite Simpson in t. No coefficient algebra from
// the library is reused beyond evaluating f and g pointwise.
inline complexd bargmann_inner_quadrature(const ptqm::BargmannFunction& f,
                                          const ptqm::BargmannFunction& g,
                                          int n_phi = 128, int n_t = 16001,
                                          double t_max = 80.0) {
  const double dt = t_max / (n_t - 1);
  complexd acc = 0.0;
  for (int it = 0; it < n_t; ++it) {
    const double t = it * dt;
    const double r = std::sqrt(t);
    complexd phi_mean = 0.0;
    for (int ip = 0; ip < n_phi; ++ip) {
      const double phi = 2.0 * std::numbers::pi * ip / n_phi;
      const complexd z = std::polar(r, phi);
      phi_mean += std::conj(f.eval(z)) * g.eval(z);
    }
    phi_mean /= static_cast<double>(n_phi);
    double w = (it == 0 || it == n_t - 1) ? 1.0 : (it % 2 == 1 ? 4.0 : 2.0);
    acc += w * phi_mean * std::exp(-t);
  }
  // pi^-1 * (1/2) dt dphi with the phi average already carrying the 2pi
  return acc * (dt / 3.0);
}

// Direct Segal-Bargmann kernel quadrature
//   B(f)(z) = int pi^{-1/4} exp(-z^2/2 + sqrt(2) z x - x^2/2) f(x) dx
// on the wavefunction's grid (trapezoid).
inline complexd segal_bargmann_kernel_eval(const ptqm::WaveFunction& f, complexd z) {
  complexd acc = 0.0;
  for (int i = 0; i < f.grid.n; ++i) {
    const double x = f.grid.node(i);
    const double w = (i == 0 || i == f.grid.n - 1) ? 0.5 : 1.0;
    const complexd kernel =
        std::pow(std::numbers::pi, -0.25) *
        std::exp(-0.5 * z * z + std::numbers::sqrt2 * z * x - 0.5 * x * x);
    acc += w * kernel * f.samples[i];
  }
  return acc * f.grid.h;
}

}  // namespace oracles

#endif
