#include "ptqm/grid.hpp"

#include <cmath>
#include <numbers>

namespace ptqm {

Grid Grid::make(double x_max, int n) {
  if (!(x_max > 0.0)) throw invalid_grid("x_max must be positive");
  if (n < 3) throw invalid_grid("need at least 3 nodes");
  if (n % 2 == 0) throw invalid_grid("even node count: the center node must sit at x = 0");
  Grid g;
  g.x_max = x_max;
  g.n = n;
  g.h = 2.0 * x_max / (n - 1);
  return g;
}

rvec Grid::nodes() const {
  rvec x(n);
  for (int i = 0; i < n; ++i) x[i] = node(i);
  return x;
}

int Grid::nearest_node(double x) const {
  // Round the offset from the center, so +a and -a land on mirror nodes
  // regardless of rounding direction.
  const int off = static_cast<int>(std::lround(x / h));
  const int idx = center() + off;
  if (idx < 0 || idx >= n) throw invalid_grid("location outside the grid");
  return idx;
}

Grid Grid::conjugate() const {
  const double dk = 2.0 * std::numbers::pi / (n * h);
  Grid g;
  g.n = n;
  g.h = dk;
  g.x_max = dk * center();
  return g;
}

bool Grid::same_as(const Grid& other, double tol) const {
  return n == other.n && std::abs(h - other.h) <= tol;
}

double WaveFunction::norm() const {
  const int n = static_cast<int>(samples.size());
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
    acc += w * std::norm(samples[i]);
  }
  return std::sqrt(acc * grid.h);
}

cmat reversal_permutation(int n) {
  cmat r = cmat::Zero(n, n);
  for (int i = 0; i < n; ++i) r(i, n - 1 - i) = 1.0;
  return r;
}

complexd grid_inner(const WaveFunction& f, const WaveFunction& g) {
  if (!f.grid.same_as(g.grid) || f.space != g.space)
    throw grid_mismatch("inner product requires matching grids and spaces");
  return f.grid.h * f.samples.dot(g.samples);
}

}  // namespace ptqm
