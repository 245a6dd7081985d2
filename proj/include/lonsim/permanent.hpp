/**
 * This code is part of lonsim.
 *
 * (C) Copyright the lonsim developers 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace lonsim {

/**
 * Permanent of a square matrix by Ryser's formula with Gray-code subset
 * updates, O(2^k * k) time for a k x k matrix. The empty matrix has
 * permanent 1. Dimensions above 30 are rejected.
 */
template <typename Derived>
typename Derived::Scalar permanent(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("permanent: matrix must be square");
  }
  const int k = static_cast<int>(a.rows());
  if (k == 0) return Scalar(1);
  if (k > 30) {
    throw std::length_error("permanent: dimension above 30 not supported");
  }

  // Ryser with inclusion-exclusion over column subsets: the Gray code walk
  // touches one column per step, so the row-sum vector is updated in O(k).
  std::vector<Scalar> row_sums(static_cast<std::size_t>(k), Scalar(0));
  Scalar total(0);
  std::uint64_t prev_gray = 0;
  const std::uint64_t count = std::uint64_t(1) << k;
  for (std::uint64_t i = 1; i < count; ++i) {
    const std::uint64_t gray = i ^ (i >> 1);
    const std::uint64_t changed = gray ^ prev_gray;
    const int col = std::countr_zero(changed);
    if (gray & changed) {
      for (int r = 0; r < k; ++r) row_sums[r] += a(r, col);
    } else {
      for (int r = 0; r < k; ++r) row_sums[r] -= a(r, col);
    }
    prev_gray = gray;

    Scalar prod(1);
    for (int r = 0; r < k; ++r) prod *= row_sums[r];
    const int popcount = std::popcount(gray);
    if ((k - popcount) % 2 == 0) {
      total += prod;
    } else {
      total -= prod;
    }
  }
  return total;
}

}  // namespace lonsim
