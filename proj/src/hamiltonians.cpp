#include "ptqm/hamiltonians.hpp"

#include <cmath>
#include <numbers>

#include "ptqm/transforms.hpp"

namespace ptqm {

OperatorMatrix assemble_position(const PotentialSpec& spec, const Grid& grid) {
  const int n = grid.n;
  const cvec v = sample_potential(spec, grid);
  cmat h = cmat::Zero(n, n);
  const double inv_h2 = 1.0 / (grid.h * grid.h);
  for (int i = 0; i < n; ++i) {
    h(i, i) = 2.0 * inv_h2 + v[i];
    if (i > 0) h(i, i - 1) = -inv_h2;
    if (i + 1 < n) h(i, i + 1) = -inv_h2;
  }
  return {Basis::position, std::move(h)};
}

complexd momentum_kernel(const PotentialSpec& spec, const Grid& grid, double q) {
  if (spec.has_poly())
    throw non_integrable_potential("polynomial terms have no integrable exponential transform");

  complexd acc = 0.0;
  for (const auto& d : spec.deltas) {
    // int [c delta(x+a) + conj(c) delta(x-a)] e^{-iqx} dx
    acc += d.strength * std::polar(1.0, q * d.location) +
           std::conj(d.strength) * std::polar(1.0, -q * d.location);
  }
  if (spec.has_tabulated()) {
    cvec v = cvec::Zero(grid.n);
    if (spec.re_tabulated) {
      if (static_cast<int>(spec.re_tabulated->size()) != grid.n)
        throw invalid_potential("tabulated real part length does not match the grid");
      for (int i = 0; i < grid.n; ++i) v[i] += (*spec.re_tabulated)[i];
    }
    if (spec.im_tabulated) {
      if (static_cast<int>(spec.im_tabulated->size()) != grid.n)
        throw invalid_potential("tabulated imaginary part length does not match the grid");
      for (int i = 0; i < grid.n; ++i) v[i] += complexd(0.0, (*spec.im_tabulated)[i]);
    }
    complexd sum = 0.0;
    for (int i = 0; i < grid.n; ++i) {
      const double w = (i == 0 || i == grid.n - 1) ? 0.5 : 1.0;
      sum += w * v[i] * std::polar(1.0, -q * grid.node(i));
    }
    acc += sum * grid.h;
  }
  return acc;
}

OperatorMatrix assemble_momentum(const PotentialSpec& spec, const Grid& grid, MomentumMethod method) {
  const int n = grid.n;
  if (method == MomentumMethod::conjugation) {
    const OperatorMatrix hp = assemble_position(spec, grid);
    const cmat f = centered_dft(n);
    return {Basis::momentum, f * hp.m * f.adjoint()};
  }

  // kernel_quadrature
  const cvec v = sample_potential(spec, grid);
  const Grid pg = grid.conjugate();
  const double dp = pg.h;

  // Vt(m dp) = h sum_l V_l e^{-i m dp x_l}, m = -(n-1) .. n-1
  cvec vt(2 * n - 1);
  for (int m = -(n - 1); m <= n - 1; ++m) {
    complexd acc = 0.0;
    const double q = m * dp;
    for (int l = 0; l < n; ++l) acc += v[l] * std::polar(1.0, -q * grid.node(l));
    vt[m + n - 1] = acc * grid.h;
  }

  const double pref = dp / (2.0 * std::numbers::pi);
  cmat k(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) k(i, j) = pref * vt[(i - j) + n - 1];
  for (int i = 0; i < n; ++i) {
    const double p = pg.node(i);
    k(i, i) += p * p;
  }
  return {Basis::momentum, std::move(k)};
}

HermiticityReport pseudo_hermiticity_check(const OperatorMatrix& h, const OperatorMatrix& eta) {
  if (h.dim() != eta.dim() || h.basis != eta.basis)
    throw invalid_metric("metric must share the operator's dimension and basis");
  if ((eta.m - eta.m.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw invalid_metric("metric operator is not Hermitian");

  // Permutation-valued metric: require an involution.
  bool permutation_like = true;
  for (int i = 0; i < eta.dim() && permutation_like; ++i)
    for (int j = 0; j < eta.dim(); ++j) {
      const double a = std::abs(eta.m(i, j));
      if (a > 1e-14 && std::abs(a - 1.0) > 1e-14) {
        permutation_like = false;
        break;
      }
    }
  if (permutation_like && (eta.m * eta.m - cmat::Identity(eta.dim(), eta.dim())).cwiseAbs().maxCoeff() > 1e-12)
    throw invalid_metric("permutation metric must square to the identity");

  const cmat resid = h.m.adjoint() - eta.m * h.m * eta.m;
  const double r = resid.cwiseAbs().maxCoeff();
  return {r, r <= 1e-10};
}

OperatorMatrix parity_metric(int n, Basis basis) {
  return {basis, reversal_permutation(n)};
}

}  // namespace ptqm
