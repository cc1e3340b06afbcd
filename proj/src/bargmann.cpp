#include "ptqm/bargmann.hpp"

#include <cmath>

#include "ptqm/transforms.hpp"

namespace ptqm {

complexd BargmannFunction::eval(complexd z) const {
  // term_n = z^n / sqrt(n!) built multiplicatively to avoid factorial overflow
  complexd acc = 0.0;
  complexd term = 1.0;
  for (int n = 0; n < static_cast<int>(coeffs.size()); ++n) {
    if (n > 0) term *= z / std::sqrt(static_cast<double>(n));
    acc += coeffs[n] * term;
  }
  return acc;
}

BargmannFunction segal_bargmann(const WaveFunction& f, int n_max) {
  if (f.space != Space::position)
    throw space_mismatch("segal_bargmann expects a position-space wavefunction");
  if (n_max < 0) throw error("segal_bargmann: n_max must be >= 0");

  const double turning_point = std::sqrt(2.0 * n_max + 1.0);
  if (turning_point + 2.0 > f.grid.x_max)
    throw unresolved_truncation("n_max too large: h_n support reaches the grid boundary");
  if (turning_point * f.grid.h > 0.5)
    throw unresolved_truncation("n_max too large: h_n oscillates below the grid resolution");

  const auto h = hermite_functions(f.grid.nodes(), n_max);
  BargmannFunction out;
  out.coeffs = cvec(n_max + 1);
  for (int m = 0; m <= n_max; ++m) {
    complexd acc = 0.0;
    for (int i = 0; i < f.grid.n; ++i) acc += h[m][i] * f.samples[i];
    out.coeffs[m] = acc * f.grid.h;
  }
  return out;
}

complexd bargmann_inner(const BargmannFunction& f, const BargmannFunction& g) {
  const int n = static_cast<int>(std::min(f.coeffs.size(), g.coeffs.size()));
  complexd acc = 0.0;
  for (int i = 0; i < n; ++i) acc += std::conj(f.coeffs[i]) * g.coeffs[i];
  return acc;
}

BargmannFunction bargmann_number_apply(const BargmannFunction& f, double omega) {
  BargmannFunction out = f;
  for (int n = 0; n < static_cast<int>(out.coeffs.size()); ++n)
    out.coeffs[n] *= omega * (n + 0.5);
  return out;
}

}  // namespace ptqm
