#ifndef PTQM_HAMILTONIANS_HPP
#define PTQM_HAMILTONIANS_HPP

#include "ptqm/potential.hpp"
#include "ptqm/types.hpp"

namespace ptqm {

/// H = p^2 + V_re(x) + i V_im(x) in units hbar = 2m = 1: kinetic term by
/// the 3-point stencil (1/h^2)[-1, 2, -1] with Dirichlet box walls one
/// spacing outside the grid, potential on the diagonal.
///
/// PT validity of the spec is not required; broken-symmetry studies pass
/// whatever they like.
OperatorMatrix assemble_position(const PotentialSpec& spec, const Grid& grid);

/// Full-line exponential transform of the potential at momentum q,
///   Vt(q) = int V(x) e^{-iqx} dx,
/// with delta pairs in closed form and tabulated terms by trapezoid over
/// the grid. For a PT-symmetric spec this reduces to the real half-line
/// cosine/sine form 2 int_0^xmax (V_re cos qx + V_im sin qx) dx; the
/// imaginary part is then a pure cancellation residue, which is what the
/// reality tests measure. Polynomial terms have distributional transforms
/// and are rejected.
complexd momentum_kernel(const PotentialSpec& spec, const Grid& grid, double q);

enum class MomentumMethod {
  /// F H_pos F^dagger with the unitary centered DFT: exactly isospectral.
  conjugation,
  /// diag(p_i^2) + (dp/2pi) Vt(p_i - p_j), with Vt the grid transform of
  /// the sampled potential. The potential block coincides entrywise with
  /// F diag(V) F^dagger; the kinetic term is the exact dispersion, so this
  /// path discretizes the periodic band-limited line rather than the
  /// Dirichlet box.
  kernel_quadrature,
};

OperatorMatrix assemble_momentum(const PotentialSpec& spec, const Grid& grid, MomentumMethod method);

struct HermiticityReport {
  double residual = 0.0;  // max |(H^dagger - eta H eta)_ij|
  bool is_pseudo_hermitian = false;
};

/// H^dagger = eta H eta check at tolerance 1e-10. eta must be Hermitian;
/// a permutation-valued eta must additionally be an involution.
HermiticityReport pseudo_hermiticity_check(const OperatorMatrix& h, const OperatorMatrix& eta);

/// Parity metric: the reversal permutation on the grid basis.
OperatorMatrix parity_metric(int n, Basis basis = Basis::position);

}  // namespace ptqm

#endif
