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

#include <vector>

#include "lonsim/types.hpp"

namespace lonsim {

/**
 * Orthonormal Hermitian basis of the m x m matrices under the
 * Hilbert-Schmidt inner product: the normalized identity followed by the
 * generalized Gell-Mann matrices scaled to unit norm.
 *
 * Canonical element order:
 *   0            : I / sqrt(m)
 *   1 .. m-1     : diagonal family, l = 1..m-1, with
 *                  (sum_{j<=l} E_jj - l E_{l+1,l+1}) / sqrt(l(l+1))
 *   m .. m^2 - 1 : off-diagonal pairs (j,k), j < k, in lexicographic order,
 *                  symmetric (E_jk + E_kj)/sqrt(2) before antisymmetric
 *                  -i(E_jk - E_kj)/sqrt(2) within each pair
 *
 * Index 0 is the only element with nonzero trace.
 */
class ModeHermitianBasis {
 public:
  explicit ModeHermitianBasis(int modes);

  int modes() const { return modes_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<CMatrix>& elements() const { return elements_; }
  const CMatrix& element(int index) const { return elements_.at(index); }

  /// Number of diagonal elements after the identity, m - 1.
  int diagonal_count() const { return modes_ - 1; }

 private:
  int modes_;
  std::vector<CMatrix> elements_;
};

/// Builds the canonical basis; throws std::invalid_argument for modes < 1.
ModeHermitianBasis ggm_basis(int modes);

}  // namespace lonsim
