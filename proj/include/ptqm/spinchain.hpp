#ifndef PTQM_SPINCHAIN_HPP
#define PTQM_SPINCHAIN_HPP

#include <optional>
#include <vector>

#include "ptqm/types.hpp"

namespace ptqm {

/// Non-Hermitian XX chain
///   H = (1/2) sum_{j=1}^{J-1} [Sx_j Sx_{j+1} + Sy_j Sy_{j+1} + i g (Sz_j - Sz_{j+1})]
/// with open boundary exactly as the sum is written, hbar = 1.
struct ChainSpec {
  int sites = 2;  // J >= 2; dense build rejected above 12
  double g = 0.0;

  static ChainSpec make(int sites, double g);
};

/// One-site spin operators on the two-mode sector n_z + n_w = 1, obtained
/// from the monomial ladder rules of the two-mode holomorphic basis
/// f_{a,b} = z^a w^b / sqrt(a! b!): z d/dw maps f_{a,b} to
/// sqrt((a+1) b) f_{a+1,b-1}, and analogously for the other bilinears.
/// On the sector these reduce to (1/2 times) the standard spin matrices.
struct SpinOps {
  cmat sx, sy, sz, number;
};

SpinOps spin_ops_bargmann();

/// Tensor-product build from the one-site spin matrices. Site 1 is the
/// slowest-varying factor.
OperatorMatrix build_xx_pauli(const ChainSpec& spec);

/// Independent build from per-site mode-exchange ladders
/// (w d/dz, z d/dw) and mode numbers, following the analytic two-mode
/// form of the chain; shares no operator construction with
/// build_xx_pauli. The two must agree entrywise.
OperatorMatrix build_xx_bargmann(const ChainSpec& spec);

struct ChainScanRow {
  double g = 0.0;
  double max_imag = 0.0;
};

struct ChainScan {
  std::vector<ChainScanRow> table;
  std::optional<double> g_reality_lost;
};

/// max |Im E| over the full chain spectrum per coupling, with the first
/// reality-breaking g refined by bisection to 1e-4.
ChainScan chain_phase_diagram(int sites, const std::vector<double>& gs);

}  // namespace ptqm

#endif
