#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ptqm/spectra.hpp"
#include "ptqm/spinchain.hpp"

using namespace ptqm;

namespace {

double max_abs(const cmat& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("spin_ops_bargmann: SU(2) algebra holds exactly on the one-particle sector") {
  const SpinOps s = spin_ops_bargmann();
  const complexd i(0.0, 1.0);
  CHECK(max_abs(s.sx * s.sy - s.sy * s.sx - i * s.sz) == 0.0);
  CHECK(max_abs(s.sy * s.sz - s.sz * s.sy - i * s.sx) == 0.0);
  CHECK(max_abs(s.sz * s.sx - s.sx * s.sz - i * s.sy) == 0.0);
}

TEST_CASE("spin_ops_bargmann: spin-1/2 structure") {
  const SpinOps s = spin_ops_bargmann();
  // S_z eigenvalues +-1/2 on the sector basis
  CHECK(s.sz(0, 0) == complexd(0.5, 0.0));
  CHECK(s.sz(1, 1) == complexd(-0.5, 0.0));
  // N = n_z + n_w is the identity on the sector and commutes with everything
  CHECK(max_abs(s.number - cmat::Identity(2, 2)) == 0.0);
  CHECK(max_abs(s.number * s.sx - s.sx * s.number) == 0.0);
  // Casimir
  const cmat casimir = s.sx * s.sx + s.sy * s.sy + s.sz * s.sz;
  CHECK(max_abs(casimir - 0.75 * cmat::Identity(2, 2)) <= 1e-16);
}

TEST_CASE("build_xx_pauli: closed-form J=2 spectra") {
  const auto eigs = [](double g) {
    return eigensolve(build_xx_pauli(ChainSpec::make(2, g))).eigenvalues;
  };

  const auto e0 = eigs(0.0);
  CHECK(std::abs(e0[0] - complexd(-0.25, 0.0)) <= 1e-12);
  CHECK(std::abs(e0[1]) <= 1e-12);
  CHECK(std::abs(e0[2]) <= 1e-12);
  CHECK(std::abs(e0[3] - complexd(0.25, 0.0)) <= 1e-12);

  // g = 0.4: +-sqrt(1/16 - g^2/4) = +-0.15
  const auto e4 = eigs(0.4);
  CHECK(std::abs(e4[0] - complexd(-0.15, 0.0)) <= 1e-10);
  CHECK(std::abs(e4[3] - complexd(0.15, 0.0)) <= 1e-10);

  // g = 0.5: exceptional point, all four eigenvalues collapse to zero
  for (const auto& ev : eigs(0.5)) CHECK(std::abs(ev) <= 1e-7);

  // g = 1: conjugate pair +- i sqrt(g^2/4 - 1/16) = +-0.4330 i
  const auto e1 = eigs(1.0);
  const double im = std::sqrt(0.25 - 0.0625);
  double best = 1e9;
  for (const auto& ev : e1) best = std::min(best, std::abs(ev - complexd(0.0, im)));
  CHECK(best <= 1e-10);
}

TEST_CASE("build_xx_pauli: g=0.5 one-flip block is defective") {
  const Spectrum s = eigensolve(build_xx_pauli(ChainSpec::make(2, 0.5)), true);
  CHECK_THROWS_AS(biorthogonality(s), defective_matrix);
}

TEST_CASE("chain spec validation") {
  CHECK_THROWS_AS(ChainSpec::make(1, 0.0), error);
  CHECK_THROWS_AS(ChainSpec::make(13, 0.0), error);
}

TEST_CASE("Pauli and Bargmann builds agree entrywise") {
  for (int sites : {2, 3, 4})
    for (double g : {0.0, 0.1, 0.4}) {
      const ChainSpec spec = ChainSpec::make(sites, g);
      const OperatorMatrix a = build_xx_pauli(spec);
      const OperatorMatrix b = build_xx_bargmann(spec);
      CHECK(max_abs(a.m - b.m) <= 1e-12);
    }
}

TEST_CASE("Bargmann build: J=3 isospectral to Pauli, Hermitian at g=0") {
  const Spectrum sa = eigensolve(build_xx_pauli(ChainSpec::make(3, 0.1)));
  const Spectrum sb = eigensolve(build_xx_bargmann(ChainSpec::make(3, 0.1)));
  for (std::size_t i = 0; i < sa.eigenvalues.size(); ++i)
    CHECK(std::abs(sa.eigenvalues[i] - sb.eigenvalues[i]) <= 1e-10);

  const OperatorMatrix h0 = build_xx_bargmann(ChainSpec::make(2, 0.0));
  CHECK(max_abs(h0.m - h0.m.adjoint()) == 0.0);
}

TEST_CASE("chain spectra close under complex conjugation for all real g") {
  for (double g : {0.0, 0.3, 0.7, 1.5}) {
    const Spectrum s = eigensolve(build_xx_pauli(ChainSpec::make(3, g)));
    for (const auto& ev : s.eigenvalues) {
      double best = 1e9;
      for (const auto& other : s.eigenvalues)
        best = std::min(best, std::abs(std::conj(ev) - other));
      CHECK(best <= 1e-8);
    }
  }
}

TEST_CASE("chain_phase_diagram: J=2 loses reality at g = 0.5") {
  std::vector<double> gs;
  for (double g = 0.0; g <= 1.001; g += 0.05) gs.push_back(g);
  const ChainScan scan = chain_phase_diagram(2, gs);
  REQUIRE(scan.g_reality_lost.has_value());
  CHECK(std::abs(*scan.g_reality_lost - 0.5) <= 1e-4);

  // J=2, g=1: the pair +-0.4330 i shows up in the table
  CHECK(scan.table.back().max_imag == doctest::Approx(std::sqrt(0.25 - 0.0625)).epsilon(1e-8));
}

TEST_CASE("chain_phase_diagram: J=3 real at small coupling") {
  const ChainScan scan = chain_phase_diagram(3, {0.05});
  CHECK(scan.table[0].max_imag <= 1e-8);
}
