#include "ptqm/spinchain.hpp"

#include <cmath>

#include "ptqm/errors.hpp"
#include "ptqm/spectra.hpp"

namespace ptqm {

namespace {

cmat kron(const cmat& a, const cmat& b) {
  cmat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// op acting on `site` (0-based), identity elsewhere; site 0 is the
// slowest-varying tensor factor.
cmat embed(const cmat& op, int site, int sites) {
  cmat out = cmat::Identity(1, 1);
  for (int s = 0; s < sites; ++s)
    out = kron(out, s == site ? op : cmat(cmat::Identity(2, 2)));
  return out;
}

// Matrix of a two-mode bilinear on the basis {f_{1,0}, f_{0,1}} from the
// ladder rule  z d/dw : f_{a,b} -> sqrt((a+1) b) f_{a+1,b-1}.
cmat mode_raise() {  // z d/dw
  cmat m = cmat::Zero(2, 2);
  m(0, 1) = std::sqrt(1.0 * 1.0);
  return m;
}

cmat mode_lower() {  // w d/dz
  cmat m = cmat::Zero(2, 2);
  m(1, 0) = std::sqrt(1.0 * 1.0);
  return m;
}

cmat mode_number_z() {  // z d/dz
  cmat m = cmat::Zero(2, 2);
  m(0, 0) = 1.0;
  return m;
}

cmat mode_number_w() {  // w d/dw
  cmat m = cmat::Zero(2, 2);
  m(1, 1) = 1.0;
  return m;
}

}  // namespace

ChainSpec ChainSpec::make(int sites, double g) {
  if (sites < 2) throw error("chain needs at least 2 sites");
  if (sites > 12) throw error("dense chain build limited to 12 sites");
  return {sites, g};
}

SpinOps spin_ops_bargmann() {
  const complexd i(0.0, 1.0);
  SpinOps ops;
  ops.sx = 0.5 * (mode_raise() + mode_lower());
  ops.sy = (0.5 / i) * (mode_raise() - mode_lower());
  ops.sz = 0.5 * (mode_number_z() - mode_number_w());
  ops.number = mode_number_z() + mode_number_w();
  return ops;
}

OperatorMatrix build_xx_pauli(const ChainSpec& spec) {
  const int J = spec.sites;
  ChainSpec::make(J, spec.g);  // revalidate
  const complexd i(0.0, 1.0);

  // hard-coded spin-1/2 matrices; the Bargmann build must not share these
  cmat sx = cmat::Zero(2, 2), sy = cmat::Zero(2, 2), sz = cmat::Zero(2, 2);
  sx(0, 1) = sx(1, 0) = 0.5;
  sy(0, 1) = -0.5 * i;
  sy(1, 0) = 0.5 * i;
  sz(0, 0) = 0.5;
  sz(1, 1) = -0.5;

  const int dim = 1 << J;
  cmat h = cmat::Zero(dim, dim);
  for (int j = 0; j + 1 < J; ++j) {
    h += 0.5 * (embed(sx, j, J) * embed(sx, j + 1, J));
    h += 0.5 * (embed(sy, j, J) * embed(sy, j + 1, J));
    h += 0.5 * i * spec.g * (embed(sz, j, J) - embed(sz, j + 1, J));
  }
  return {Basis::spin_product, std::move(h)};
}

OperatorMatrix build_xx_bargmann(const ChainSpec& spec) {
  const int J = spec.sites;
  ChainSpec::make(J, spec.g);
  const complexd i(0.0, 1.0);

  // hop: (1/4) [ (w d/dz)_j (z d/dw)_{j+1} + (z d/dw)_j (w d/dz)_{j+1} ]
  // stagger: (i g / 4) [ n_z - n_w ]_j - [ n_z - n_w ]_{j+1}
  const cmat up = mode_raise(), dn = mode_lower();
  const cmat nz = mode_number_z(), nw = mode_number_w();

  const int dim = 1 << J;
  cmat h = cmat::Zero(dim, dim);
  for (int j = 0; j + 1 < J; ++j) {
    h += 0.25 * (embed(dn, j, J) * embed(up, j + 1, J));
    h += 0.25 * (embed(up, j, J) * embed(dn, j + 1, J));
    h += 0.25 * i * spec.g *
         (embed(nz - nw, j, J) - embed(nz - nw, j + 1, J));
  }
  return {Basis::spin_product, std::move(h)};
}

ChainScan chain_phase_diagram(int sites, const std::vector<double>& gs) {
  const auto max_imag = [&](double g) {
    const Spectrum s = eigensolve(build_xx_pauli(ChainSpec::make(sites, g)));
    double worst = 0.0;
    for (const auto& ev : s.eigenvalues) worst = std::max(worst, std::abs(ev.imag()));
    return worst;
  };

  ChainScan out;
  out.table.reserve(gs.size());
  for (const double g : gs) out.table.push_back({g, max_imag(g)});

  constexpr double tol = 1e-8;
  for (std::size_t i = 0; i + 1 < out.table.size(); ++i) {
    if (out.table[i].max_imag <= tol && out.table[i + 1].max_imag > tol) {
      double lo = out.table[i].g, hi = out.table[i + 1].g;
      while (hi - lo > 1e-4) {
        const double mid = 0.5 * (lo + hi);
        (max_imag(mid) > tol ? hi : lo) = mid;
      }
      out.g_reality_lost = 0.5 * (lo + hi);
      break;
    }
  }
  return out;
}

}  // namespace ptqm
