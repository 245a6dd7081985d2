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

#include <memory>

#include "lonsim/frame.hpp"
#include "lonsim/scattering.hpp"
#include "lonsim/types.hpp"

namespace lonsim {

/// strict rejects any violation of positivity; lenient clips small negative
/// eigenvalues to zero and renormalizes the trace.
enum class StateValidation { strict, lenient };

/**
 * Density matrix on a Fock sector together with its real coordinate vector
 * in a Hermitian frame, coeffs[i] = tr(H_i rho). The frame fixes both the
 * sector and the coordinate order; coeffs[0] = 1/sqrt(M) always.
 */
class DensityState {
 public:
  DensityState(CMatrix rho, RVector coeffs, FramePtr frame);

  int dim() const { return static_cast<int>(rho_.rows()); }
  const CMatrix& rho() const { return rho_; }
  const RVector& coeffs() const { return coeffs_; }
  const HermitianFrame& frame() const { return *frame_; }
  FramePtr frame_ptr() const { return frame_; }

  double purity() const;

 private:
  CMatrix rho_;
  RVector coeffs_;
  FramePtr frame_;
};

/**
 * Validates rho (Hermitian, unit trace, positive semidefinite within
 * kMatrixTol) and expands it over the frame. strict mode throws
 * std::invalid_argument on any violation; lenient mode accepts eigenvalues
 * down to -1e-6, clips them to zero and renormalizes.
 */
DensityState density_vector(const CMatrix& rho, FramePtr frame,
                            StateValidation mode = StateValidation::strict);

/// Rank-one state |psi><psi| from a normalized amplitude vector.
DensityState pure_state(const CVector& amplitudes, FramePtr frame);

/// Maximally mixed state I/M on the sector of the frame.
DensityState maximally_mixed(FramePtr frame);

/// Conjugates the state by a multiphoton unitary, rho -> V rho V^dag.
DensityState evolve(const DensityState& state, const MultiPhotonUnitary& v);

/**
 * Uhlmann fidelity F(rho, sigma) = (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2,
 * symmetric in its arguments and 1 exactly when they coincide.
 */
double fidelity(const CMatrix& rho, const CMatrix& sigma);

}  // namespace lonsim
