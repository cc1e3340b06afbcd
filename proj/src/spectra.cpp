#include <complex>
#define LAPACK_COMPLEX_CUSTOM
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "ptqm/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <thread>

#include "ptqm/hamiltonians.hpp"

namespace ptqm {

Spectrum eigensolve(const OperatorMatrix& h, bool want_left) {
  const int n = h.dim();
  if (n < 1) throw eigensolve_failure("empty matrix");
  if (!h.m.allFinite()) throw eigensolve_failure("matrix has non-finite entries");

  cmat a = h.m;  // zgeev overwrites its input
  cvec w(n);
  cmat vr(n, n);
  cmat vl = want_left ? cmat(n, n) : cmat();
  const lapack_int info = LAPACKE_zgeev(
      LAPACK_COL_MAJOR, want_left ? 'V' : 'N', 'V', n, a.data(), n, w.data(),
      want_left ? vl.data() : nullptr, n, vr.data(), n);
  if (info != 0)
    throw eigensolve_failure("zgeev failed to converge, info = " + std::to_string(info));

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    if (w[i].real() != w[j].real()) return w[i].real() < w[j].real();
    return w[i].imag() < w[j].imag();
  });

  Spectrum s;
  s.eigenvalues.resize(n);
  s.residuals.resize(n);
  s.right.resize(n, n);
  if (want_left) s.left.resize(n, n);
  s.h_max_abs = h.m.cwiseAbs().maxCoeff();
  for (int col = 0; col < n; ++col) {
    const int src = order[col];
    s.eigenvalues[col] = w[src];
    s.right.col(col) = vr.col(src);
    if (want_left) s.left.col(col) = vl.col(src);
    const double vnorm = s.right.col(col).norm();
    s.residuals[col] = (h.m * s.right.col(col) - w[src] * s.right.col(col)).norm() / vnorm;
    s.max_residual = std::max(s.max_residual, s.residuals[col]);
  }
  return s;
}

bool certified(const Spectrum& s, double tol) {
  return s.max_residual <= tol * s.h_max_abs * static_cast<double>(s.eigenvalues.size());
}

PTClassification classify(const Spectrum& s, double tol) {
  if (!(tol > 0.0)) throw error("classify: tolerance must be positive");
  PTClassification out;
  const int n = static_cast<int>(s.eigenvalues.size());
  std::vector<int> complex_idx;
  for (int i = 0; i < n; ++i) {
    if (std::abs(s.eigenvalues[i].imag()) <= tol)
      ++out.n_real;
    else
      complex_idx.push_back(i);
  }
  std::vector<bool> used(complex_idx.size(), false);
  for (std::size_t a = 0; a < complex_idx.size(); ++a) {
    if (used[a]) continue;
    const complexd la = s.eigenvalues[complex_idx[a]];
    int best = -1;
    double best_d = tol;
    for (std::size_t b = a + 1; b < complex_idx.size(); ++b) {
      if (used[b]) continue;
      const double d = std::abs(la - std::conj(s.eigenvalues[complex_idx[b]]));
      if (d <= best_d) {
        best_d = d;
        best = static_cast<int>(b);
      }
    }
    if (best >= 0) {
      used[a] = used[best] = true;
      out.conjugate_pairs.emplace_back(complex_idx[a], complex_idx[best]);
    } else {
      used[a] = true;
      out.unpaired_complex.push_back(complex_idx[a]);
    }
  }
  out.phase = complex_idx.empty() ? Phase::unbroken : Phase::broken;
  return out;
}

double low_spectrum_max_imag(const Spectrum& s, int n_lowest) {
  // eigenvalues are already sorted by real part
  const int n = std::min<int>(n_lowest, static_cast<int>(s.eigenvalues.size()));
  double worst = 0.0;
  for (int i = 0; i < n; ++i) worst = std::max(worst, std::abs(s.eigenvalues[i].imag()));
  return worst;
}

namespace {

int scan_thread_count(std::size_t jobs) {
  int cap = 1;
  if (const char* env = std::getenv("PTQM_THREADS")) {
    cap = std::max(1, std::atoi(env));
  }
  return static_cast<int>(std::min<std::size_t>(cap, jobs));
}

}  // namespace

ScanResult pt_phase_scan(const std::function<PotentialSpec(double)>& family,
                         const std::vector<double>& lambdas, const Grid& grid,
                         const ScanOptions& opts) {
  const auto indicator = [&](double lam) {
    const Spectrum s = eigensolve(assemble_position(family(lam), grid));
    return low_spectrum_max_imag(s, opts.n_lowest);
  };

  ScanResult out;
  out.table.resize(lambdas.size());
  const int nthreads = scan_thread_count(lambdas.size());
  if (nthreads <= 1) {
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      const Spectrum s = eigensolve(assemble_position(family(lambdas[i]), grid));
      const double mi = low_spectrum_max_imag(s, opts.n_lowest);
      out.table[i] = {lambdas[i], mi, classify(s, opts.indicator_tol).n_real,
                      mi > opts.indicator_tol};
    }
  } else {
    std::vector<std::thread> pool;
    auto worker = [&](std::size_t begin, std::size_t stride) {
      for (std::size_t i = begin; i < lambdas.size(); i += stride) {
        const Spectrum s = eigensolve(assemble_position(family(lambdas[i]), grid));
        const double mi = low_spectrum_max_imag(s, opts.n_lowest);
        out.table[i] = {lambdas[i], mi, classify(s, opts.indicator_tol).n_real,
                        mi > opts.indicator_tol};
      }
    };
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t, nthreads);
    for (auto& th : pool) th.join();
  }

  // first clean -> broken transition, refined by bisection
  for (std::size_t i = 0; i + 1 < out.table.size(); ++i) {
    if (!out.table[i].beyond_threshold && out.table[i + 1].beyond_threshold) {
      double lo = out.table[i].lambda;
      double hi = out.table[i + 1].lambda;
      while (hi - lo > opts.bisect_tol) {
        const double mid = 0.5 * (lo + hi);
        (indicator(mid) > opts.indicator_tol ? hi : lo) = mid;
      }
      out.threshold = 0.5 * (lo + hi);
      break;
    }
  }
  return out;
}

double biorthogonality(const Spectrum& s) {
  if (s.left.size() == 0)
    throw error("biorthogonality needs a spectrum solved with want_left = true");
  const cmat b = s.left.adjoint() * s.right;
  const int n = static_cast<int>(b.rows());
  rvec d(n);
  for (int i = 0; i < n; ++i) {
    d[i] = std::abs(b(i, i));
    if (d[i] < 1e-12)
      throw defective_matrix("left/right eigenvector pairing collapsed at index " +
                             std::to_string(i));
  }
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) worst = std::max(worst, std::abs(b(i, j)) / std::sqrt(d[i] * d[j]));
  return worst;
}

}  // namespace ptqm
