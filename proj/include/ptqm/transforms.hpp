#ifndef PTQM_TRANSFORMS_HPP
#define PTQM_TRANSFORMS_HPP

#include <vector>

#include "ptqm/grid.hpp"
#include "ptqm/types.hpp"

namespace ptqm {

/// Normalization pair for the exponential Fourier transform.
///
/// unitary: (2pi)^{-1/2} on both directions. This is the convention under
/// which the transform is an isometry and the operator chain
/// F^0 = id, F^2 = parity, F^4 = id closes.
///
/// analyst: prefactor 1 forward, (2pi)^{-1} inverse, as forced by
/// int e^{ik(x-x')} dk = 2pi delta(x-x').
enum class FourierConvention { unitary, analyst };

/// Centered discrete Fourier matrix
///   C_jl = n^{-1/2} exp(-2pi i (j-c)(l-c)/n),  c = (n-1)/2 (n odd),
/// exactly unitary, with C^2 equal to the index-reversal permutation.
cmat centered_dft(int n);

struct UnitaryFourierMatrix {
  int n = 0;
  cmat f;

  static UnitaryFourierMatrix make(int n);
};

/// Position -> momentum transform on the conjugate grid
/// k_j = 2pi (j-c)/(n h). Unitary convention preserves the plain grid
/// inner product exactly.
WaveFunction fourier(const WaveFunction& f, FourierConvention conv = FourierConvention::unitary);

/// Momentum -> position inverse; inverse_fourier(fourier(f)) = f.
WaveFunction inverse_fourier(const WaveFunction& f, FourierConvention conv = FourierConvention::unitary);

/// F^k for k in 0..3, unitary convention. F^2 is exact sample reversal,
/// F^3 coincides with the inverse transform.
WaveFunction fourier_power(const WaveFunction& f, int k);

/// Pf(x) = f(-x): index permutation, no arithmetic.
WaveFunction parity(const WaveFunction& f);

/// Trapezoid-discretized convolution int f(x-y) g(y) dy with zero padding
/// outside the grid.
cvec convolve(const cvec& f, const cvec& g, double h);
WaveFunction convolve(const WaveFunction& f, const WaveFunction& g);

struct ParsevalPair {
  complexd lhs;  // position-space <f, g>
  complexd rhs;  // momentum-space <F, G> under the chosen convention
};

/// Generalized Parseval relation. Unitary: lhs = rhs. Analyst:
/// lhs = rhs / (2pi).
ParsevalPair parseval(const WaveFunction& f, const WaveFunction& g,
                      FourierConvention conv = FourierConvention::unitary);

/// L2-normalized Hermite functions h_0..h_nmax sampled on x, generated by
/// the stable three-term recurrence on the functions themselves.
std::vector<rvec> hermite_functions(const rvec& x, int n_max);

}  // namespace ptqm

#endif
