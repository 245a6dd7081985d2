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
#include <span>
#include <string>
#include <vector>

#include "lonsim/fock_basis.hpp"
#include "lonsim/gell_mann.hpp"
#include "lonsim/types.hpp"

namespace lonsim {

/**
 * Normalized images of the mode basis under the second-quantized map on an
 * n-photon sector: H_0 = I(M)/sqrt(M) from the identity, and
 * H_i = J(g_i)/sqrt(C(m+n, m+1)) for the traceless g_i, in the canonical
 * order of ggm_basis(m). The elements are orthonormal under the
 * Hilbert-Schmidt inner product and, past index 0, traceless.
 */
std::vector<CMatrix> tangent_basis(const FockBasis& basis);

/**
 * Unnormalized second-quantized images J(g_i) of the mode basis, same
 * order. Index 0 is (n/sqrt(m)) I(M).
 */
std::vector<CMatrix> raw_observables(const FockBasis& basis);

/**
 * Completes a tangent set to an orthonormal basis of the Hermitian
 * M x M matrices: Gram-Schmidt over the canonical M-dimensional basis of
 * ggm_basis(M), dropping candidates whose residual norm falls below 1e-8.
 * Returns M^2 - m^2 elements, each traceless and orthogonal to every
 * tangent element.
 */
std::vector<CMatrix> perpendicular_basis(const FockBasis& basis,
                                         const std::vector<CMatrix>& tangent);

/**
 * Orthonormal Hermitian frame {H_i} of an n-photon sector, dimension M,
 * split into three parts by index:
 *
 *   0            : normalized identity I(M)/sqrt(M)
 *   1 .. m^2-1   : traceless tangent elements (images of mode operators)
 *   m^2 .. M^2-1 : perpendicular completion
 *
 * Every Hermitian A on the sector expands as A = sum_i tr(H_i A) H_i.
 */
class HermitianFrame {
 public:
  HermitianFrame(std::shared_ptr<const FockBasis> basis,
                 std::vector<CMatrix> elements,
                 std::vector<CMatrix> raw_observables);

  int photons() const { return basis_->photons(); }
  int modes() const { return basis_->modes(); }
  int dim() const { return basis_->dim(); }
  int size() const { return static_cast<int>(elements_.size()); }

  /// Number of tangent elements including the identity, m^2.
  int tangent_size() const { return modes() * modes(); }

  const FockBasis& basis() const { return *basis_; }
  std::shared_ptr<const FockBasis> basis_ptr() const { return basis_; }
  const std::vector<CMatrix>& elements() const { return elements_; }
  const CMatrix& element(int index) const { return elements_.at(index); }

  std::span<const CMatrix> traceless_tangent() const;
  std::span<const CMatrix> perpendicular() const;

  /// Unnormalized mode-operator images J(g_i), i < m^2.
  const std::vector<CMatrix>& observables() const { return raw_observables_; }

  /// Stable identifier of the frame contents, used to name cache files.
  std::string cache_key() const;

 private:
  std::shared_ptr<const FockBasis> basis_;
  std::vector<CMatrix> elements_;
  std::vector<CMatrix> raw_observables_;
};

using FramePtr = std::shared_ptr<const HermitianFrame>;

/**
 * Builds the frame for an n-photon sector on m modes and verifies
 * orthonormality, tracelessness and the size of each part. Throws
 * std::length_error when the sector dimension exceeds max_dim.
 */
HermitianFrame build_frame(int photons, int modes, int max_dim = kDefaultDimCap);

/// build_frame wrapped in a shared_ptr for use by DensityState and htm.
FramePtr build_frame_shared(int photons, int modes,
                            int max_dim = kDefaultDimCap);

/**
 * Like build_frame_shared but first consults a cache directory of frames
 * serialized by frame_to_json. cache_dir may be empty, in which case the
 * LONSIM_FRAME_CACHE environment variable is consulted; if that is unset
 * too, the frame is built directly. A corrupt or stale cache file is
 * ignored and rewritten.
 */
FramePtr load_or_build_frame(int photons, int modes,
                             const std::string& cache_dir = "",
                             int max_dim = kDefaultDimCap);

}  // namespace lonsim
