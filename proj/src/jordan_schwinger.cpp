/**
 * This code is part of lonsim.
 *
 * (C) Copyright the lonsim developers 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "lonsim/jordan_schwinger.hpp"

#include <cmath>
#include <stdexcept>

namespace lonsim {

CMatrix js_map(const CMatrix& h, const FockBasis& basis) {
  const int m = basis.modes();
  if (h.rows() != m || h.cols() != m) {
    throw std::invalid_argument("js_map: generator size must match mode count");
  }
  if (hermiticity_error(h) > kMatrixTol) {
    throw std::invalid_argument("js_map: generator must be Hermitian");
  }

  const int dim = basis.dim();
  CMatrix out = CMatrix::Zero(dim, dim);
  std::vector<int> shifted;
  for (int col = 0; col < dim; ++col) {
    const std::vector<int>& v = basis.state(col).occupations;
    for (int t = 0; t < m; ++t) {
      if (v[static_cast<std::size_t>(t)] == 0) continue;
      for (int s = 0; s < m; ++s) {
        const Complex coeff = h(s, t);
        if (coeff == Complex(0.0, 0.0)) continue;
        // a_s^dag a_t |v> = sqrt(v_t) sqrt(v_s - delta_st + 1) |v - e_t + e_s>
        shifted = v;
        --shifted[static_cast<std::size_t>(t)];
        const double amp =
            std::sqrt(double(v[static_cast<std::size_t>(t)])) *
            std::sqrt(double(shifted[static_cast<std::size_t>(s)] + 1));
        ++shifted[static_cast<std::size_t>(s)];
        out(basis.index_of(shifted), col) += coeff * amp;
      }
    }
  }
  return out;
}

CMatrix number_operator(int mode, const FockBasis& basis) {
  if (mode < 0 || mode >= basis.modes()) {
    throw std::invalid_argument("number_operator: mode index out of range");
  }
  const int dim = basis.dim();
  CMatrix out = CMatrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    out(i, i) = double(basis.state(i).occupations[static_cast<std::size_t>(mode)]);
  }
  return out;
}

}  // namespace lonsim
