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

#include <Eigen/Dense>
#include <complex>

namespace lonsim {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

// Largest multiphoton dimension M the library will materialize by default.
// Dense frames hold M * M matrices of size M x M, so this cap keeps memory
// and run time bounded; callers may raise it explicitly.
inline constexpr int kDefaultDimCap = 512;

// Largest photon number accepted by the factorial-prefactor table.
inline constexpr int kMaxPhotons = 20;

// Unitarity, Hermiticity and orthonormality checks use this tolerance.
inline constexpr double kMatrixTol = 1e-10;

/// Max-norm of a matrix expression, |A|_inf over entries.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& a) {
  return a.cwiseAbs().maxCoeff();
}

/// Hilbert-Schmidt inner product tr(A^dag B).
template <typename DerivedA, typename DerivedB>
Complex hs_inner(const Eigen::MatrixBase<DerivedA>& a,
                 const Eigen::MatrixBase<DerivedB>& b) {
  return (a.conjugate().cwiseProduct(b)).sum();
}

/// Deviation of S from unitarity, |S^dag S - I|_inf.
template <typename Derived>
double unitarity_error(const Eigen::MatrixBase<Derived>& s) {
  if (s.rows() != s.cols()) return 1.0;
  CMatrix g = s.adjoint() * s;
  g.diagonal().array() -= 1.0;
  return max_abs(g);
}

/// Deviation of A from Hermiticity, |A - A^dag|_inf.
template <typename Derived>
double hermiticity_error(const Eigen::MatrixBase<Derived>& a) {
  if (a.rows() != a.cols()) return 1.0;
  return max_abs((a - a.adjoint()).eval());
}

}  // namespace lonsim
