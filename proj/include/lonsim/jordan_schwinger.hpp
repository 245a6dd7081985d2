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

#include "lonsim/fock_basis.hpp"
#include "lonsim/types.hpp"

namespace lonsim {

/**
 * Second-quantized image of a Hermitian mode operator on a Fock sector,
 *
 *   J(h) = sum_{k,l} h_{kl} a_k^dag a_l
 *
 * as an M x M matrix in the basis order of `basis`. J is a Lie algebra
 * homomorphism: J([g,h]) = [J(g), J(h)], and exp(i J(h)) is the multiphoton
 * lift of exp(i h). Throws std::invalid_argument if h is not Hermitian or
 * its size differs from the mode count.
 */
CMatrix js_map(const CMatrix& h, const FockBasis& basis);

/// Number operator of one mode as a diagonal M x M matrix.
CMatrix number_operator(int mode, const FockBasis& basis);

}  // namespace lonsim
