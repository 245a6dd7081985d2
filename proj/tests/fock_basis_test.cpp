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

#include <stdexcept>
#include <vector>

#include "lonsim/fock_basis.hpp"

using namespace lonsim;

TEST_CASE("binomial coefficients match Pascal's rule and edge conventions") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(5, -1) == 0);
  for (int a = 1; a < 20; ++a) {
    for (int b = 1; b < a; ++b) {
      CHECK(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
    }
  }
  CHECK(binomial(62, 31) == 465428353255261088ull);
  CHECK_THROWS_AS(binomial(70, 35), std::overflow_error);
}

TEST_CASE("factorial is exact over the supported photon range") {
  CHECK(factorial(0) == 1.0);
  CHECK(factorial(1) == 1.0);
  CHECK(factorial(5) == 120.0);
  CHECK(factorial(20) == 2432902008176640000.0);
  CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
  CHECK_THROWS_AS(factorial(kMaxPhotons + 1), std::invalid_argument);
}

TEST_CASE("two-mode two-photon basis enumerates in decreasing order") {
  FockBasis basis = enumerate_fock_basis(2, 2);
  REQUIRE(basis.dim() == 3);
  CHECK(basis.state(0).occupations == std::vector<int>{2, 0});
  CHECK(basis.state(1).occupations == std::vector<int>{1, 1});
  CHECK(basis.state(2).occupations == std::vector<int>{0, 2});
}

TEST_CASE("three-mode two-photon basis enumerates in decreasing order") {
  FockBasis basis = enumerate_fock_basis(2, 3);
  REQUIRE(basis.dim() == 6);
  const std::vector<std::vector<int>> expected = {
      {2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
  for (int i = 0; i < basis.dim(); ++i) {
    CHECK(basis.state(i).occupations == expected[static_cast<std::size_t>(i)]);
  }
}

TEST_CASE("four-mode two-photon basis starts and ends at the extreme states") {
  FockBasis basis = enumerate_fock_basis(2, 4);
  REQUIRE(basis.dim() == 10);
  CHECK(basis.state(0).occupations == std::vector<int>{2, 0, 0, 0});
  CHECK(basis.state(1).occupations == std::vector<int>{1, 1, 0, 0});
  CHECK(basis.state(9).occupations == std::vector<int>{0, 0, 0, 2});
}

TEST_CASE("basis dimension equals the stars-and-bars count") {
  CHECK(enumerate_fock_basis(2, 2).dim() == 3);
  CHECK(enumerate_fock_basis(3, 2).dim() == 4);
  CHECK(enumerate_fock_basis(3, 3).dim() == 10);
  CHECK(enumerate_fock_basis(4, 5).dim() == 70);
  CHECK(static_cast<std::uint64_t>(enumerate_fock_basis(4, 5).dim()) ==
        binomial(4 + 5 - 1, 4));
}

TEST_CASE("enumeration is strictly decreasing lexicographically") {
  FockBasis basis = enumerate_fock_basis(3, 4);
  for (int i = 0; i + 1 < basis.dim(); ++i) {
    CHECK(basis.state(i).occupations > basis.state(i + 1).occupations);
    CHECK(basis.state(i).total() == 3);
  }
}

TEST_CASE("index_of inverts enumeration and rejects unknown states") {
  FockBasis basis = enumerate_fock_basis(3, 3);
  for (int i = 0; i < basis.dim(); ++i) {
    CHECK(basis.index_of(basis.state(i).occupations) == i);
  }
  CHECK_THROWS_AS(basis.index_of({3, 1, 0}), std::out_of_range);
  CHECK_THROWS_AS(basis.index_of({1, 1}), std::out_of_range);
}

TEST_CASE("invalid sector parameters are rejected") {
  CHECK_THROWS_AS(enumerate_fock_basis(-1, 2), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_fock_basis(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_fock_basis(kMaxPhotons + 1, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_fock_basis(10, 10, 100), std::length_error);
}

TEST_CASE("fock state formatting lists occupations in order") {
  CHECK(to_string(FockState{{2, 0, 1}}) == "|2,0,1>");
  CHECK(to_string(FockState{{0}}) == "|0>");
}
