/**
 * This code is part of lonsim.
 *
 * (C) Copyright the lonsim developers 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "lonsim/density.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace lonsim {

namespace {

constexpr double kLenientFloor = -1e-6;

RVector expand_coeffs(const CMatrix& rho, const HermitianFrame& frame) {
  const int size = frame.size();
  RVector coeffs(size);
  for (int i = 0; i < size; ++i) {
    coeffs(i) = hs_inner(frame.element(i), rho).real();
  }
  return coeffs;
}

CMatrix matrix_sqrt_psd(const CMatrix& a) {
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(a);
  RVector vals = eig.eigenvalues();
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    vals(i) = std::sqrt(std::max(vals(i), 0.0));
  }
  return eig.eigenvectors() * vals.asDiagonal() *
         eig.eigenvectors().adjoint();
}

}  // namespace

DensityState::DensityState(CMatrix rho, RVector coeffs, FramePtr frame)
    : rho_(std::move(rho)), coeffs_(std::move(coeffs)), frame_(std::move(frame)) {
  if (!frame_) throw std::invalid_argument("DensityState: frame must be set");
  const int dim = frame_->dim();
  if (rho_.rows() != dim || rho_.cols() != dim) {
    throw std::invalid_argument("DensityState: rho size does not match frame");
  }
  if (coeffs_.size() != frame_->size()) {
    throw std::invalid_argument(
        "DensityState: coefficient count does not match frame");
  }
}

double DensityState::purity() const { return coeffs_.squaredNorm(); }

DensityState density_vector(const CMatrix& rho, FramePtr frame,
                            StateValidation mode) {
  if (!frame) throw std::invalid_argument("density_vector: frame must be set");
  const int dim = frame->dim();
  if (rho.rows() != dim || rho.cols() != dim) {
    throw std::invalid_argument("density_vector: rho size does not match frame");
  }
  if (hermiticity_error(rho) > kMatrixTol) {
    throw std::invalid_argument("density_vector: rho is not Hermitian");
  }
  if (std::abs(rho.trace() - Complex(1.0)) > kMatrixTol) {
    throw std::invalid_argument("density_vector: trace differs from one");
  }

  CMatrix sym = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(sym);
  const double min_eig = eig.eigenvalues().minCoeff();
  if (min_eig < -kMatrixTol) {
    if (mode == StateValidation::strict || min_eig < kLenientFloor) {
      throw std::invalid_argument("density_vector: rho is not positive");
    }
    RVector vals = eig.eigenvalues().cwiseMax(0.0);
    const double total = vals.sum();
    if (total <= 0.0) {
      throw std::invalid_argument("density_vector: rho has no positive mass");
    }
    vals /= total;
    sym = eig.eigenvectors() * vals.asDiagonal() * eig.eigenvectors().adjoint();
  }
  RVector coeffs = expand_coeffs(sym, *frame);
  return DensityState(std::move(sym), std::move(coeffs), std::move(frame));
}

DensityState pure_state(const CVector& amplitudes, FramePtr frame) {
  if (!frame) throw std::invalid_argument("pure_state: frame must be set");
  if (amplitudes.size() != frame->dim()) {
    throw std::invalid_argument(
        "pure_state: amplitude count does not match frame");
  }
  const double norm = amplitudes.norm();
  if (std::abs(norm - 1.0) > 1e-9) {
    throw std::invalid_argument("pure_state: amplitudes are not normalized");
  }
  const CVector psi = amplitudes / norm;
  CMatrix rho = psi * psi.adjoint();
  RVector coeffs = expand_coeffs(rho, *frame);
  return DensityState(std::move(rho), std::move(coeffs), std::move(frame));
}

DensityState maximally_mixed(FramePtr frame) {
  if (!frame) throw std::invalid_argument("maximally_mixed: frame must be set");
  const int dim = frame->dim();
  CMatrix rho = CMatrix::Identity(dim, dim) / double(dim);
  RVector coeffs = RVector::Zero(frame->size());
  coeffs(0) = 1.0 / std::sqrt(double(dim));
  return DensityState(std::move(rho), std::move(coeffs), std::move(frame));
}

DensityState evolve(const DensityState& state, const MultiPhotonUnitary& v) {
  if (v.dim() != state.dim()) {
    throw std::invalid_argument("evolve: unitary size does not match state");
  }
  CMatrix rho = v.matrix() * state.rho() * v.matrix().adjoint();
  rho = 0.5 * (rho + rho.adjoint());
  FramePtr frame = state.frame_ptr();
  RVector coeffs = expand_coeffs(rho, *frame);
  return DensityState(std::move(rho), std::move(coeffs), std::move(frame));
}

double fidelity(const CMatrix& rho, const CMatrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols() ||
      rho.rows() != rho.cols()) {
    throw std::invalid_argument("fidelity: matrices must be square and equal");
  }
  const CMatrix root = matrix_sqrt_psd(rho);
  const CMatrix inner = matrix_sqrt_psd(root * sigma * root);
  const double trace = inner.trace().real();
  return trace * trace;
}

}  // namespace lonsim
