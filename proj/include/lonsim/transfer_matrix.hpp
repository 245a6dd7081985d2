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

#include "lonsim/density.hpp"
#include "lonsim/frame.hpp"
#include "lonsim/gell_mann.hpp"
#include "lonsim/scattering.hpp"
#include "lonsim/types.hpp"

namespace lonsim {

/**
 * Action of a unitary conjugation on frame coordinates,
 *
 *   R_ij = tr(H_i V H_j V^dag),
 *
 * a real orthogonal M^2 x M^2 matrix: coords(V rho V^dag) = R coords(rho).
 * For lifted network unitaries R is block diagonal with a trivial 1 in the
 * (0,0) corner, a tangent block and a perpendicular block, each orthogonal
 * on its own.
 */
class TransferMatrix {
 public:
  TransferMatrix(RMatrix matrix, FramePtr frame);

  const RMatrix& matrix() const { return matrix_; }
  const HermitianFrame& frame() const { return *frame_; }

  double scalar_entry() const { return matrix_(0, 0); }
  /// Rows/cols 0 .. m^2-1 (includes the trivial corner).
  RMatrix tangent_block() const;
  /// Rows/cols 1 .. m^2-1.
  RMatrix traceless_tangent_block() const;
  /// Rows/cols m^2 .. M^2-1.
  RMatrix perpendicular_block() const;

  /// Largest off-block entry magnitude; ~0 for lifted network unitaries.
  double block_leakage() const;

 private:
  RMatrix matrix_;
  FramePtr frame_;
};

/**
 * Transfer matrix of V in the given frame. When v.lifted() is set the block
 * structure is verified and a std::runtime_error reports any cross-block
 * entry above 100 * kMatrixTol; for frames past 4096 elements the check
 * samples 1000 random cross entries instead of all of them.
 */
TransferMatrix htm(const MultiPhotonUnitary& v, FramePtr frame);

/**
 * Mode-space transfer matrix R_ij = tr(g_i S g_j S^dag) over a mode basis,
 * an m^2 x m^2 real orthogonal matrix. For a lifted V = phi(S) this equals
 * the tangent block of htm(V) entry by entry.
 */
RMatrix htm_scattering(const CMatrix& s, const ModeHermitianBasis& basis);

}  // namespace lonsim
