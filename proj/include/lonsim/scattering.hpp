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
#include <optional>

#include "lonsim/fock_basis.hpp"
#include "lonsim/types.hpp"

namespace lonsim {

/**
 * Mode-space unitary S of a lossless linear optical network, optionally
 * carrying the Hermitian generator h with S = exp(i h).
 */
class ScatteringUnitary {
 public:
  /// Validates |S^dag S - I|_inf < kMatrixTol; throws std::invalid_argument.
  explicit ScatteringUnitary(CMatrix matrix);
  ScatteringUnitary(CMatrix matrix, CMatrix generator);

  /// Builds S = exp(i h) from a Hermitian generator.
  static ScatteringUnitary from_generator(const CMatrix& h);

  int modes() const { return static_cast<int>(matrix_.rows()); }
  const CMatrix& matrix() const { return matrix_; }
  const std::optional<CMatrix>& generator() const { return generator_; }

 private:
  CMatrix matrix_;
  std::optional<CMatrix> generator_;
};

/**
 * Two-mode unitary with Euler angles (alpha, beta, gamma):
 *
 *   [  e^{ i(alpha+gamma)/2 } cos(beta/2)   e^{ i(alpha-gamma)/2 } sin(beta/2) ]
 *   [ -e^{-i(alpha-gamma)/2 } sin(beta/2)   e^{-i(alpha+gamma)/2 } cos(beta/2) ]
 */
CMatrix two_mode_scattering(double alpha, double beta, double gamma);

/**
 * n x n transition matrix for amplitude <out| phi(S) |in>: column i of S is
 * repeated in_i times, then row j of the result is repeated out_j times.
 */
CMatrix submatrix_for_transition(const CMatrix& s, const FockState& in,
                                 const FockState& out);

/**
 * Multiphoton unitary acting on a Fock sector, usually the lift phi(S) of a
 * mode unitary. The lifted flag marks matrices produced by
 * photonic_homomorphism; the transfer-matrix block structure is only
 * guaranteed for those.
 */
class MultiPhotonUnitary {
 public:
  MultiPhotonUnitary(CMatrix matrix, std::shared_ptr<const FockBasis> basis,
                     bool lifted);

  int photons() const { return basis_->photons(); }
  int modes() const { return basis_->modes(); }
  int dim() const { return static_cast<int>(matrix_.rows()); }
  const CMatrix& matrix() const { return matrix_; }
  const FockBasis& basis() const { return *basis_; }
  std::shared_ptr<const FockBasis> basis_ptr() const { return basis_; }
  bool lifted() const { return lifted_; }

 private:
  CMatrix matrix_;
  std::shared_ptr<const FockBasis> basis_;
  bool lifted_;
};

/**
 * Lift of S to the n-photon sector:
 *
 *   V[B,A] = Per(S_{B,A}) / sqrt(prod_j B_j! * prod_i A_i!)
 *
 * in the canonical basis order. phi is a group homomorphism,
 * phi(S T) = phi(S) phi(T), and phi(S) = S for n = 1. Throws
 * std::invalid_argument for photons outside [0, kMaxPhotons] and
 * std::length_error when the sector dimension exceeds max_dim.
 */
MultiPhotonUnitary photonic_homomorphism(const ScatteringUnitary& s,
                                         int photons,
                                         int max_dim = kDefaultDimCap);

/// Lift of a bare matrix; validates unitarity first.
MultiPhotonUnitary photonic_homomorphism(const CMatrix& s, int photons,
                                         int max_dim = kDefaultDimCap);

}  // namespace lonsim
