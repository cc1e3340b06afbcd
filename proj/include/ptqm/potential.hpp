#ifndef PTQM_POTENTIAL_HPP
#define PTQM_POTENTIAL_HPP

#include <optional>
#include <vector>

#include "ptqm/grid.hpp"
#include "ptqm/types.hpp"

namespace ptqm {

/// One mirrored pair of Dirac deltas,
///   strength * delta(x + location) + conj(strength) * delta(x - location),
/// which is PT-symmetric for any complex strength.
struct DeltaPair {
  complexd strength;
  double location = 0.0;
};

/// Symbolic potential V(x) = V_re(x) + i V_im(x) with V_re even and
/// V_im odd. Terms are added through the typed constructors below, which
/// reject parity-violating input, so every spec built this way satisfies
/// V(-x) = conj(V(x)) identically.
struct PotentialSpec {
  // Ascending coefficients c_k of sum c_k x^k; only even k allowed.
  std::vector<double> re_poly;
  // Only odd k allowed.
  std::vector<double> im_poly;
  std::vector<DeltaPair> deltas;
  // Full-grid samples, validated even/odd at sampling time.
  std::optional<std::vector<double>> re_tabulated;
  std::optional<std::vector<double>> im_tabulated;

  PotentialSpec& add_even_poly(std::vector<double> coeffs);
  PotentialSpec& add_odd_poly(std::vector<double> coeffs);
  /// c delta(x+a) + conj(c) delta(x-a).
  PotentialSpec& add_delta_pair(complexd strength, double location);
  /// s [delta(x+a) + delta(x-a)] into the real part.
  PotentialSpec& add_real_delta_pair(double strength, double location);
  /// s [delta(x-a) - delta(x+a)] into the imaginary part, i.e. V_im(+a) = s.
  PotentialSpec& add_imag_delta_pair(double strength, double location);
  PotentialSpec& add_tabulated_even(std::vector<double> samples);
  PotentialSpec& add_tabulated_odd(std::vector<double> samples);

  bool has_poly() const { return !re_poly.empty() || !im_poly.empty(); }
  bool has_tabulated() const { return re_tabulated || im_tabulated; }
};

/// V(x_i) on the grid. Delta pairs become Kronecker spikes of height
/// strength/h at the node nearest each location.
cvec sample_potential(const PotentialSpec& spec, const Grid& grid);

struct PTReport {
  bool is_pt = false;
  double max_violation = 0.0;
};

/// max_i |V(-x_i) - conj(V(x_i))|; PT-symmetric at 1e-12.
PTReport check_pt_symmetry(const PotentialSpec& spec, const Grid& grid);

}  // namespace ptqm

#endif
