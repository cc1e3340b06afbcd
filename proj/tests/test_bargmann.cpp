#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "ptqm/bargmann.hpp"
#include "ptqm/transforms.hpp"

using namespace ptqm;

namespace {

WaveFunction hermite_wf(const Grid& g, int n) {
  const auto h = hermite_functions(g.nodes(), n);
  WaveFunction f;
  f.grid = g;
  f.space = Space::position;
  f.samples = h[n].cast<complexd>();
  return f;
}

BargmannFunction unit_monomial(int n, complexd scale = 1.0) {
  BargmannFunction b;
  b.coeffs = cvec::Zero(n + 1);
  b.coeffs[n] = scale;
  return b;
}

}  // namespace

TEST_CASE("segal_bargmann maps h_0 and h_1 to 1 and z") {
  const Grid g = Grid::make(10.0, 801);

  const BargmannFunction b0 = segal_bargmann(hermite_wf(g, 0), 12);
  CHECK(std::abs(b0.coeffs[0] - 1.0) <= 1e-10);
  for (int n = 1; n <= 12; ++n) CHECK(std::abs(b0.coeffs[n]) <= 1e-10);

  const BargmannFunction b1 = segal_bargmann(hermite_wf(g, 1), 12);
  CHECK(std::abs(b1.coeffs[1] - 1.0) <= 1e-10);
  CHECK(std::abs(b1.coeffs[0]) <= 1e-10);
}

TEST_CASE("segal_bargmann is linear: (h_0 + h_2)/sqrt(2)") {
  const Grid g = Grid::make(10.0, 801);
  const auto h = hermite_functions(g.nodes(), 2);
  WaveFunction f;
  f.grid = g;
  f.space = Space::position;
  f.samples = ((h[0] + h[2]) / std::numbers::sqrt2).cast<complexd>();
  const BargmannFunction b = segal_bargmann(f, 8);
  CHECK(std::abs(b.coeffs[0] - 1.0 / std::numbers::sqrt2) <= 1e-10);
  CHECK(std::abs(b.coeffs[2] - 1.0 / std::numbers::sqrt2) <= 1e-10);
  CHECK(std::abs(b.coeffs[1]) <= 1e-10);
  CHECK(std::abs(b.coeffs[3]) <= 1e-10);
}

TEST_CASE("segal_bargmann agrees with direct kernel quadrature") {
  const Grid g = Grid::make(10.0, 801);
  const auto h = hermite_functions(g.nodes(), 3);
  WaveFunction f;
  f.grid = g;
  f.space = Space::position;
  f.samples = (0.6 * h[0] + 0.8 * h[3]).cast<complexd>();
  const BargmannFunction b = segal_bargmann(f, 10);

  for (const complexd z : {complexd(0.3, 0.0), complexd(-0.7, 0.4), complexd(0.0, 1.1)}) {
    const complexd via_kernel = oracles::segal_bargmann_kernel_eval(f, z);
    CHECK(std::abs(b.eval(z) - via_kernel) <= 1e-8);
  }
}

TEST_CASE("segal_bargmann rejects cutoffs the grid cannot resolve") {
  const WaveFunction f = hermite_wf(Grid::make(5.0, 101), 0);
  CHECK_THROWS_AS(segal_bargmann(f, 40), unresolved_truncation);

  WaveFunction coarse = hermite_wf(Grid::make(40.0, 41), 0);
  CHECK_THROWS_AS(segal_bargmann(coarse, 30), unresolved_truncation);
}

TEST_CASE("bargmann_inner: monomials are orthonormal, cross-checked by quadrature") {
  for (int n = 0; n <= 6; n += 2)
    for (int m = 0; m <= 6; m += 3) {
      const complexd direct = bargmann_inner(unit_monomial(n), unit_monomial(m));
      const complexd quad =
          oracles::bargmann_inner_quadrature(unit_monomial(n), unit_monomial(m));
      CHECK(std::abs(direct - (n == m ? 1.0 : 0.0)) <= 1e-14);
      CHECK(std::abs(quad - direct) <= 1e-8);
    }
}

TEST_CASE("bargmann_inner: the (-i)^n phase is a unit-modulus overlap") {
  for (int n = 0; n <= 5; ++n) {
    const complexd phase = std::pow(complexd(0.0, -1.0), n);
    const complexd v = bargmann_inner(unit_monomial(n), unit_monomial(n, phase));
    CHECK(std::abs(v - phase) <= 1e-14);
    CHECK(std::abs(std::abs(v) - 1.0) <= 1e-14);
  }
}

TEST_CASE("bargmann_inner: positive definite") {
  std::mt19937 rng(3);
  std::normal_distribution<double> dist;
  BargmannFunction f;
  f.coeffs = cvec(9);
  for (int i = 0; i < 9; ++i) f.coeffs[i] = complexd(dist(rng), dist(rng));
  const complexd self = bargmann_inner(f, f);
  CHECK(self.real() > 0.0);
  CHECK(std::abs(self.imag()) <= 1e-15 * self.real());

  BargmannFunction zero;
  zero.coeffs = cvec::Zero(4);
  CHECK(std::abs(bargmann_inner(zero, zero)) == 0.0);
}

TEST_CASE("bargmann_number_apply: monomials are eigenvectors with omega(n + 1/2)") {
  const BargmannFunction z2 = unit_monomial(2);
  const BargmannFunction applied = bargmann_number_apply(z2, 1.0);
  CHECK(std::abs(applied.coeffs[2] - 2.5) <= 1e-15);

  const BargmannFunction one = unit_monomial(0);
  CHECK(std::abs(bargmann_number_apply(one, 2.0).coeffs[0] - 1.0) <= 1e-15);

  BargmannFunction mix;
  mix.coeffs = cvec(2);
  mix.coeffs[0] = 1.0;
  mix.coeffs[1] = 1.0;
  const BargmannFunction out = bargmann_number_apply(mix, 1.0);
  CHECK(std::abs(out.coeffs[0] - 0.5) <= 1e-15);
  CHECK(std::abs(out.coeffs[1] - 1.5) <= 1e-15);
}

TEST_CASE("unitarity: grid inner products survive the transform to coefficients") {
  const Grid g = Grid::make(10.0, 801);
  const auto h = hermite_functions(g.nodes(), 20);
  std::mt19937 rng(17);
  std::normal_distribution<double> dist;

  for (int trial = 0; trial < 5; ++trial) {
    WaveFunction f, q;
    f.grid = q.grid = g;
    f.space = q.space = Space::position;
    f.samples = cvec::Zero(g.n);
    q.samples = cvec::Zero(g.n);
    for (int m = 0; m <= 20; ++m) {
      const complexd a(dist(rng), dist(rng)), b(dist(rng), dist(rng));
      for (int i = 0; i < g.n; ++i) {
        f.samples[i] += a * h[m][i];
        q.samples[i] += b * h[m][i];
      }
    }
    const complexd lhs = grid_inner(f, q);
    const complexd rhs = bargmann_inner(segal_bargmann(f, 25), segal_bargmann(q, 25));
    CHECK(std::abs(lhs - rhs) <= 1e-8);
  }
}
