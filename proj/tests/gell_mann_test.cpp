/**
 * This code is part of lonsim.
 *
 * (C) Copyright the lonsim developers 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "lonsim/gell_mann.hpp"
#include "test_helpers.hpp"

using namespace lonsim;

TEST_CASE("two-mode basis is the scaled Pauli set in canonical order") {
  const ModeHermitianBasis basis = ggm_basis(2);
  REQUIRE(basis.size() == 4);
  CHECK(basis.diagonal_count() == 1);
  const double r = 1.0 / std::sqrt(2.0);

  CMatrix id(2, 2), z(2, 2), x(2, 2), y(2, 2);
  id << 1, 0, 0, 1;
  z << 1, 0, 0, -1;
  x << 0, 1, 1, 0;
  y << 0, Complex(0, -1), Complex(0, 1), 0;
  CHECK(test::matrix_distance(basis.element(0), r * id) < 1e-15);
  CHECK(test::matrix_distance(basis.element(1), r * z) < 1e-15);
  CHECK(test::matrix_distance(basis.element(2), r * x) < 1e-15);
  CHECK(test::matrix_distance(basis.element(3), r * y) < 1e-15);
}

TEST_CASE("three-mode diagonal family follows the canonical construction") {
  const ModeHermitianBasis basis = ggm_basis(3);
  REQUIRE(basis.size() == 9);
  CHECK(basis.diagonal_count() == 2);

  CMatrix d1 = CMatrix::Zero(3, 3);
  d1(0, 0) = 1.0 / std::sqrt(2.0);
  d1(1, 1) = -1.0 / std::sqrt(2.0);
  CHECK(test::matrix_distance(basis.element(1), d1) < 1e-15);

  CMatrix d2 = CMatrix::Zero(3, 3);
  d2(0, 0) = 1.0 / std::sqrt(6.0);
  d2(1, 1) = 1.0 / std::sqrt(6.0);
  d2(2, 2) = -2.0 / std::sqrt(6.0);
  CHECK(test::matrix_distance(basis.element(2), d2) < 1e-15);
}

TEST_CASE("off-diagonal pairs come in symmetric-before-antisymmetric order") {
  const ModeHermitianBasis basis = ggm_basis(3);
  // After identity and the two diagonal elements, the (0,1) pair leads.
  const double r = 1.0 / std::sqrt(2.0);
  CMatrix sym01 = CMatrix::Zero(3, 3);
  sym01(0, 1) = r;
  sym01(1, 0) = r;
  CMatrix anti01 = CMatrix::Zero(3, 3);
  anti01(0, 1) = Complex(0, -r);
  anti01(1, 0) = Complex(0, r);
  CHECK(test::matrix_distance(basis.element(3), sym01) < 1e-15);
  CHECK(test::matrix_distance(basis.element(4), anti01) < 1e-15);

  CMatrix sym02 = CMatrix::Zero(3, 3);
  sym02(0, 2) = r;
  sym02(2, 0) = r;
  CHECK(test::matrix_distance(basis.element(5), sym02) < 1e-15);
  CMatrix anti12 = CMatrix::Zero(3, 3);
  anti12(1, 2) = Complex(0, -r);
  anti12(2, 1) = Complex(0, r);
  CHECK(test::matrix_distance(basis.element(8), anti12) < 1e-15);
}

TEST_CASE("basis elements are Hermitian, orthonormal, and traceless past 0") {
  for (int m = 2; m <= 5; ++m) {
    const ModeHermitianBasis basis = ggm_basis(m);
    REQUIRE(basis.size() == m * m);
    for (int i = 0; i < basis.size(); ++i) {
      CHECK(hermiticity_error(basis.element(i)) < 1e-14);
      if (i > 0) CHECK(std::abs(basis.element(i).trace()) < 1e-14);
      for (int j = i; j < basis.size(); ++j) {
        const Complex overlap = hs_inner(basis.element(i), basis.element(j));
        const double expected = (i == j) ? 1.0 : 0.0;
        CHECK(std::abs(overlap - expected) < 1e-14);
      }
    }
  }
}

TEST_CASE("basis expansion reconstructs arbitrary Hermitian matrices") {
  auto rng = test::seeded_rng(301);
  const int m = 4;
  const ModeHermitianBasis basis = ggm_basis(m);
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix g(m, m);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) g(r, c) = Complex(gauss(rng), gauss(rng));
  }
  const CMatrix h = 0.5 * (g + g.adjoint()).eval();
  CMatrix rebuilt = CMatrix::Zero(m, m);
  for (int i = 0; i < basis.size(); ++i) {
    rebuilt += hs_inner(basis.element(i), h).real() * basis.element(i);
  }
  CHECK(test::matrix_distance(rebuilt, h) < 1e-12);
}

TEST_CASE("invalid mode counts are rejected") {
  CHECK_THROWS_AS(ggm_basis(0), std::invalid_argument);
  CHECK_THROWS_AS(ggm_basis(-2), std::invalid_argument);
}
