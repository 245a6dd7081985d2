/**
 * This code is part of lonsim.
 *
 * (C) Copyright the lonsim developers 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "lonsim/gell_mann.hpp"

#include <cmath>
#include <stdexcept>

namespace lonsim {

ModeHermitianBasis::ModeHermitianBasis(int modes) : modes_(modes) {
  if (modes < 1) {
    throw std::invalid_argument("ModeHermitianBasis: modes must be >= 1");
  }
  const int m = modes;
  elements_.reserve(static_cast<std::size_t>(m) * m);

  elements_.push_back(CMatrix::Identity(m, m) / std::sqrt(double(m)));

  for (int l = 1; l < m; ++l) {
    CMatrix d = CMatrix::Zero(m, m);
    for (int j = 0; j < l; ++j) d(j, j) = 1.0;
    d(l, l) = -double(l);
    elements_.push_back(d / std::sqrt(double(l) * (l + 1)));
  }

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < m; ++j) {
    for (int k = j + 1; k < m; ++k) {
      CMatrix sym = CMatrix::Zero(m, m);
      sym(j, k) = inv_sqrt2;
      sym(k, j) = inv_sqrt2;
      elements_.push_back(sym);

      CMatrix anti = CMatrix::Zero(m, m);
      anti(j, k) = Complex(0.0, -inv_sqrt2);
      anti(k, j) = Complex(0.0, inv_sqrt2);
      elements_.push_back(anti);
    }
  }
}

ModeHermitianBasis ggm_basis(int modes) { return ModeHermitianBasis(modes); }

}  // namespace lonsim
