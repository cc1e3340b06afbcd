#ifndef PTQM_TYPES_HPP
#define PTQM_TYPES_HPP

#include <Eigen/Dense>
#include <complex>

namespace ptqm {

using complexd = std::complex<double>;
using cvec = Eigen::VectorXcd;
using cmat = Eigen::MatrixXcd;
using rvec = Eigen::VectorXd;

// Basis a dense operator is expressed in. Binary operations require
// matching tags; the tag never changes numerics, only bookkeeping.
enum class Basis {
  position,
  momentum,
  fock,
  spin_product,
  bargmann_monomial,
};

struct OperatorMatrix {
  Basis basis = Basis::position;
  cmat m;

  int dim() const { return static_cast<int>(m.rows()); }
};

inline const char* basis_name(Basis b) {
  switch (b) {
    case Basis::position: return "position";
    case Basis::momentum: return "momentum";
    case Basis::fock: return "fock";
    case Basis::spin_product: return "spin_product";
    case Basis::bargmann_monomial: return "bargmann_monomial";
  }
  return "?";
}

}  // namespace ptqm

#endif
