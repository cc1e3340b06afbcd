#ifndef PTQM_GRID_HPP
#define PTQM_GRID_HPP

#include "ptqm/errors.hpp"
#include "ptqm/types.hpp"

namespace ptqm {

/// Uniform one-dimensional lattice, symmetric about the origin.
///
/// The node count is kept odd so that x = 0 is a node and the reversal
/// permutation i -> n-1-i is an exact discrete parity with a fixed point
/// at the center. Downstream pseudo-Hermiticity checks rely on this
/// holding to machine precision, not just approximately.
struct Grid {
  double x_max = 0.0;
  int n = 0;
  double h = 0.0;

  static Grid make(double x_max, int n);

  double x_min() const { return -x_max; }
  int center() const { return (n - 1) / 2; }
  double node(int i) const { return (i - center()) * h; }
  rvec nodes() const;

  /// Index of the node nearest to x, resolved symmetrically about the
  /// center so that mirror points always snap to mirror indices.
  int nearest_node(double x) const;

  /// Conjugate (momentum) grid: spacing 2*pi/(n*h), same node count.
  Grid conjugate() const;

  bool same_as(const Grid& other, double tol = 1e-12) const;
};

enum class Space { position, momentum };

/// Complex samples of a function on a grid, tagged with the space the
/// samples live in.
struct WaveFunction {
  Grid grid;
  cvec samples;
  Space space = Space::position;

  /// Trapezoid-rule L2 norm.
  double norm() const;
};

/// Reversal permutation as a dense matrix (discrete parity).
cmat reversal_permutation(int n);

/// Plain Riemann inner product h * sum conj(f_i) g_i. This is the
/// discrete pairing preserved exactly by the unitary Fourier matrix;
/// the trapezoid norm differs from it only through the endpoint weights.
complexd grid_inner(const WaveFunction& f, const WaveFunction& g);

}  // namespace ptqm

#endif
