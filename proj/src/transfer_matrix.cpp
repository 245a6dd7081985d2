/**
 * This code is part of lonsim.
 *
 * (C) Copyright the lonsim developers 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "lonsim/transfer_matrix.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "lonsim/random.hpp"

namespace lonsim {

namespace {

constexpr int kSampledCheckSize = 4096;

}  // namespace

TransferMatrix::TransferMatrix(RMatrix matrix, FramePtr frame)
    : matrix_(std::move(matrix)), frame_(std::move(frame)) {
  if (!frame_) throw std::invalid_argument("TransferMatrix: frame must be set");
  const int size = frame_->size();
  if (matrix_.rows() != size || matrix_.cols() != size) {
    throw std::invalid_argument(
        "TransferMatrix: matrix size does not match frame");
  }
}

RMatrix TransferMatrix::tangent_block() const {
  const int t = frame_->tangent_size();
  return matrix_.topLeftCorner(t, t);
}

RMatrix TransferMatrix::traceless_tangent_block() const {
  const int t = frame_->tangent_size();
  return matrix_.block(1, 1, t - 1, t - 1);
}

RMatrix TransferMatrix::perpendicular_block() const {
  const int t = frame_->tangent_size();
  const int p = frame_->size() - t;
  return matrix_.block(t, t, p, p);
}

double TransferMatrix::block_leakage() const {
  const int t = frame_->tangent_size();
  const int size = frame_->size();
  double worst = 0.0;
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      const bool i_tan = i < t;
      const bool j_tan = j < t;
      if (i_tan != j_tan) {
        worst = std::max(worst, std::abs(matrix_(i, j)));
      }
    }
  }
  return worst;
}

TransferMatrix htm(const MultiPhotonUnitary& v, FramePtr frame) {
  if (!frame) throw std::invalid_argument("htm: frame must be set");
  if (v.dim() != frame->dim()) {
    throw std::invalid_argument("htm: unitary size does not match frame");
  }
  const int size = frame->size();
  const CMatrix& u = v.matrix();

  std::vector<CMatrix> conjugated;
  conjugated.reserve(static_cast<std::size_t>(size));
  for (int j = 0; j < size; ++j) {
    conjugated.push_back(u * frame->element(j) * u.adjoint());
  }

  RMatrix r(size, size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      r(i, j) = hs_inner(frame->element(i),
                         conjugated[static_cast<std::size_t>(j)])
                    .real();
    }
  }

  TransferMatrix out(std::move(r), frame);
  if (v.lifted()) {
    const double limit = 100 * kMatrixTol;
    double leak = 0.0;
    if (size <= kSampledCheckSize) {
      leak = out.block_leakage();
    } else {
      const int t = frame->tangent_size();
      std::mt19937_64 rng(fnv1a64(frame->cache_key()));
      std::uniform_int_distribution<int> pick_tan(0, t - 1);
      std::uniform_int_distribution<int> pick_perp(t, size - 1);
      std::bernoulli_distribution flip(0.5);
      for (int s = 0; s < 1000; ++s) {
        const int a = pick_tan(rng);
        const int b = pick_perp(rng);
        const double entry =
            flip(rng) ? out.matrix()(a, b) : out.matrix()(b, a);
        leak = std::max(leak, std::abs(entry));
      }
    }
    if (leak > limit) {
      std::ostringstream msg;
      msg << "htm: lifted unitary has cross-block entry " << leak
          << " above " << limit;
      throw std::runtime_error(msg.str());
    }
  }
  return out;
}

RMatrix htm_scattering(const CMatrix& s, const ModeHermitianBasis& basis) {
  const int m = basis.modes();
  if (s.rows() != m || s.cols() != m) {
    throw std::invalid_argument(
        "htm_scattering: matrix size does not match basis");
  }
  const int size = basis.size();
  RMatrix r(size, size);
  for (int j = 0; j < size; ++j) {
    const CMatrix conj = s * basis.element(j) * s.adjoint();
    for (int i = 0; i < size; ++i) {
      r(i, j) = hs_inner(basis.element(i), conj).real();
    }
  }
  return r;
}

}  // namespace lonsim
