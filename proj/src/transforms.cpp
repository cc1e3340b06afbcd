#include "ptqm/transforms.hpp"

#include <cmath>
#include <numbers>

namespace ptqm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double forward_scale(const Grid& g, FourierConvention conv) {
  // Quadrature weight h times the ratio between the continuum kernel and
  // the n^{-1/2}-normalized discrete one.
  const double s = g.h * std::sqrt(static_cast<double>(g.n));
  return conv == FourierConvention::unitary ? s / std::sqrt(kTwoPi) : s;
}

double inverse_scale(const Grid& g, FourierConvention conv) {
  const double s = g.h * std::sqrt(static_cast<double>(g.n));
  return conv == FourierConvention::unitary ? s / std::sqrt(kTwoPi) : s / kTwoPi;
}

}  // namespace

cmat centered_dft(int n) {
  const int c = (n - 1) / 2;
  cmat f(n, n);
  const double w = -kTwoPi / n;
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l)
      f(j, l) = std::polar(1.0 / std::sqrt(static_cast<double>(n)),
                           w * static_cast<double>(j - c) * static_cast<double>(l - c));
  return f;
}

UnitaryFourierMatrix UnitaryFourierMatrix::make(int n) {
  if (n < 1 || n % 2 == 0) throw invalid_grid("centered DFT needs odd n");
  return {n, centered_dft(n)};
}

WaveFunction fourier(const WaveFunction& f, FourierConvention conv) {
  if (f.space != Space::position)
    throw space_mismatch("fourier expects a position-space wavefunction");
  WaveFunction out;
  out.grid = f.grid.conjugate();
  out.space = Space::momentum;
  out.samples = forward_scale(f.grid, conv) * (centered_dft(f.grid.n) * f.samples);
  return out;
}

WaveFunction inverse_fourier(const WaveFunction& f, FourierConvention conv) {
  if (f.space != Space::momentum)
    throw space_mismatch("inverse_fourier expects a momentum-space wavefunction");
  WaveFunction out;
  out.grid = f.grid.conjugate();
  out.space = Space::position;
  out.samples = inverse_scale(f.grid, conv) * (centered_dft(f.grid.n).adjoint() * f.samples);
  return out;
}

WaveFunction fourier_power(const WaveFunction& f, int k) {
  if (k < 0 || k > 3) throw error("fourier_power: k must be in 0..3");
  WaveFunction out = f;
  for (int step = 0; step < k; ++step) {
    const double scale = forward_scale(out.grid, FourierConvention::unitary);
    out.samples = scale * (centered_dft(out.grid.n) * out.samples);
    out.grid = out.grid.conjugate();
    out.space = out.space == Space::position ? Space::momentum : Space::position;
  }
  return out;
}

WaveFunction parity(const WaveFunction& f) {
  WaveFunction out = f;
  out.samples = f.samples.reverse();
  return out;
}

cvec convolve(const cvec& f, const cvec& g, double h) {
  const int n = static_cast<int>(f.size());
  const int c = (n - 1) / 2;
  cvec out = cvec::Zero(n);
  for (int i = 0; i < n; ++i) {
    complexd acc = 0.0;
    for (int j = 0; j < n; ++j) {
      const int m = i - j + c;  // index of x_i - y_j
      if (m >= 0 && m < n) acc += f[m] * g[j];
    }
    out[i] = acc * h;
  }
  return out;
}

WaveFunction convolve(const WaveFunction& f, const WaveFunction& g) {
  if (!f.grid.same_as(g.grid) || f.space != g.space)
    throw grid_mismatch("convolve requires matching grids");
  WaveFunction out = f;
  out.samples = convolve(f.samples, g.samples, f.grid.h);
  return out;
}

ParsevalPair parseval(const WaveFunction& f, const WaveFunction& g, FourierConvention conv) {
  const WaveFunction ff = fourier(f, conv);
  const WaveFunction gg = fourier(g, conv);
  return {grid_inner(f, g), grid_inner(ff, gg)};
}

std::vector<rvec> hermite_functions(const rvec& x, int n_max) {
  const int n = static_cast<int>(x.size());
  std::vector<rvec> h;
  h.reserve(n_max + 1);
  rvec h0(n);
  for (int i = 0; i < n; ++i)
    h0[i] = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x[i] * x[i]);
  h.push_back(std::move(h0));
  if (n_max >= 1) h.push_back((std::sqrt(2.0) * x.array() * h[0].array()).matrix());
  for (int k = 1; k < n_max; ++k) {
    rvec next = (std::sqrt(2.0 / (k + 1)) * x.array() * h[k].array()).matrix() -
                std::sqrt(static_cast<double>(k) / (k + 1)) * h[k - 1];
    h.push_back(std::move(next));
  }
  return h;
}

}  // namespace ptqm
