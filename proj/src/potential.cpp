#include "ptqm/potential.hpp"

#include <cmath>

namespace ptqm {

namespace {

void merge_poly(std::vector<double>& dst, const std::vector<double>& src) {
  if (dst.size() < src.size()) dst.resize(src.size(), 0.0);
  for (std::size_t k = 0; k < src.size(); ++k) dst[k] += src[k];
}

double eval_poly(const std::vector<double>& coeffs, double x) {
  double acc = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
  return acc;
}

}  // namespace

PotentialSpec& PotentialSpec::add_even_poly(std::vector<double> coeffs) {
  for (std::size_t k = 1; k < coeffs.size(); k += 2)
    if (coeffs[k] != 0.0)
      throw invalid_potential("real part must be even: odd coefficient at power " + std::to_string(k));
  merge_poly(re_poly, coeffs);
  return *this;
}

PotentialSpec& PotentialSpec::add_odd_poly(std::vector<double> coeffs) {
  for (std::size_t k = 0; k < coeffs.size(); k += 2)
    if (coeffs[k] != 0.0)
      throw invalid_potential("imaginary part must be odd: even coefficient at power " + std::to_string(k));
  merge_poly(im_poly, coeffs);
  return *this;
}

PotentialSpec& PotentialSpec::add_delta_pair(complexd strength, double location) {
  if (location < 0.0) throw invalid_potential("delta pair location must be >= 0");
  deltas.push_back({strength, location});
  return *this;
}

PotentialSpec& PotentialSpec::add_real_delta_pair(double strength, double location) {
  return add_delta_pair(complexd(strength, 0.0), location);
}

PotentialSpec& PotentialSpec::add_imag_delta_pair(double strength, double location) {
  // c delta(x+a) + conj(c) delta(x-a) with c = -i s gives i V_im with
  // V_im = s [delta(x-a) - delta(x+a)].
  return add_delta_pair(complexd(0.0, -strength), location);
}

PotentialSpec& PotentialSpec::add_tabulated_even(std::vector<double> samples) {
  const std::size_t n = samples.size();
  for (std::size_t i = 0; i < n; ++i)
    if (samples[i] != samples[n - 1 - i])
      throw invalid_potential("tabulated real part is not even");
  if (re_tabulated) {
    for (std::size_t i = 0; i < n; ++i) (*re_tabulated)[i] += samples[i];
  } else {
    re_tabulated = std::move(samples);
  }
  return *this;
}

PotentialSpec& PotentialSpec::add_tabulated_odd(std::vector<double> samples) {
  const std::size_t n = samples.size();
  for (std::size_t i = 0; i < n; ++i)
    if (samples[i] != -samples[n - 1 - i])
      throw invalid_potential("tabulated imaginary part is not odd");
  if (im_tabulated) {
    for (std::size_t i = 0; i < n; ++i) (*im_tabulated)[i] += samples[i];
  } else {
    im_tabulated = std::move(samples);
  }
  return *this;
}

cvec sample_potential(const PotentialSpec& spec, const Grid& grid) {
  const int n = grid.n;
  cvec v = cvec::Zero(n);
  for (int i = 0; i < n; ++i) {
    const double x = grid.node(i);
    v[i] = complexd(eval_poly(spec.re_poly, x), eval_poly(spec.im_poly, x));
  }
  if (spec.re_tabulated) {
    if (static_cast<int>(spec.re_tabulated->size()) != n)
      throw invalid_potential("tabulated real part length does not match the grid");
    for (int i = 0; i < n; ++i) v[i] += (*spec.re_tabulated)[i];
  }
  if (spec.im_tabulated) {
    if (static_cast<int>(spec.im_tabulated->size()) != n)
      throw invalid_potential("tabulated imaginary part length does not match the grid");
    for (int i = 0; i < n; ++i) v[i] += complexd(0.0, (*spec.im_tabulated)[i]);
  }
  for (const auto& d : spec.deltas) {
    const int ip = grid.nearest_node(d.location);
    const int im = grid.n - 1 - ip;  // exact mirror of the snapped node
    v[im] += d.strength / grid.h;
    v[ip] += std::conj(d.strength) / grid.h;
  }
  return v;
}

PTReport check_pt_symmetry(const PotentialSpec& spec, const Grid& grid) {
  const cvec v = sample_potential(spec, grid);
  double worst = 0.0;
  for (int i = 0; i < grid.n; ++i) {
    const complexd diff = v[grid.n - 1 - i] - std::conj(v[i]);
    worst = std::max(worst, std::abs(diff));
  }
  return {worst <= 1e-12, worst};
}

}  // namespace ptqm
