#ifndef PTQM_SPECTRA_HPP
#define PTQM_SPECTRA_HPP

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ptqm/potential.hpp"
#include "ptqm/types.hpp"

namespace ptqm {

/// Full dense spectrum with residual certification. Eigenvalues are
/// sorted by (real part, imaginary part); eigenvectors follow the same
/// order as columns. Residuals are ||H v - lambda v||_2 with unit v; they
/// are backward errors, small even where the eigenvalue itself is badly
/// conditioned.
struct Spectrum {
  std::vector<complexd> eigenvalues;
  std::vector<double> residuals;
  double max_residual = 0.0;
  double h_max_abs = 0.0;  // max |H_ij|, for the certification bound
  cmat right;              // right eigenvectors, unit columns
  cmat left;               // left eigenvectors (u^H H = lambda u^H); empty unless requested
};

/// Dense non-Hermitian eigensolution (LAPACK zgeev) with residuals.
/// Throws eigensolve_failure if the QR iteration does not converge.
Spectrum eigensolve(const OperatorMatrix& h, bool want_left = false);

/// Certification rule: max residual <= tol * h_max_abs * dim.
bool certified(const Spectrum& s, double tol = 1e-8);

enum class Phase { unbroken, broken };

struct PTClassification {
  Phase phase = Phase::unbroken;
  int n_real = 0;
  std::vector<std::pair<int, int>> conjugate_pairs;
  std::vector<int> unpaired_complex;
};

/// Partition a spectrum into real eigenvalues (|Im| <= tol) and
/// conjugate pairs matched greedily on |lambda_i - conj(lambda_j)| <= tol.
/// Complex eigenvalues that fail to pair are reported, never dropped.
PTClassification classify(const Spectrum& s, double tol);

struct ScanRow {
  double lambda = 0.0;
  double max_imag = 0.0;
  int n_real = 0;
  bool beyond_threshold = false;
};

struct ScanOptions {
  int n_lowest = 10;            // indicator window: lowest eigenvalues by real part
  double indicator_tol = 1e-8;  // |Im| above this counts as broken
  double bisect_tol = 1e-4;     // resolution of the refined threshold
};

struct ScanResult {
  std::optional<double> threshold;
  std::vector<ScanRow> table;
};

/// Coarse scan of max |Im| over the lowest eigenvalues for a potential
/// family, followed by bisection between the last clean and the first
/// broken sample. Scans parallelize across lambda when PTQM_THREADS > 1;
/// rows are merged in lambda order regardless.
ScanResult pt_phase_scan(const std::function<PotentialSpec(double)>& family,
                         const std::vector<double>& lambdas, const Grid& grid,
                         const ScanOptions& opts = {});

/// Indicator used by the scan: max |Im| over the n lowest (by real part)
/// eigenvalues.
double low_spectrum_max_imag(const Spectrum& s, int n_lowest);

/// Normalize L^H R to diagonal and report the largest off-diagonal
/// modulus. Requires a spectrum solved with want_left = true. Throws
/// defective_matrix when a diagonal pairing collapses.
double biorthogonality(const Spectrum& s);

}  // namespace ptqm

#endif
