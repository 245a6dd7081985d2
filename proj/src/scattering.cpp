/**
 * This code is part of lonsim.
 *
 * (C) Copyright the lonsim developers 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "lonsim/scattering.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "lonsim/permanent.hpp"

namespace lonsim {

namespace {

void require_unitary(const CMatrix& matrix, const char* who) {
  if (matrix.rows() < 1 || matrix.rows() != matrix.cols()) {
    throw std::invalid_argument(std::string(who) + ": matrix must be square");
  }
  if (unitarity_error(matrix) > kMatrixTol) {
    throw std::invalid_argument(std::string(who) + ": matrix is not unitary");
  }
}

}  // namespace

ScatteringUnitary::ScatteringUnitary(CMatrix matrix)
    : matrix_(std::move(matrix)) {
  require_unitary(matrix_, "ScatteringUnitary");
}

ScatteringUnitary::ScatteringUnitary(CMatrix matrix, CMatrix generator)
    : matrix_(std::move(matrix)), generator_(std::move(generator)) {
  require_unitary(matrix_, "ScatteringUnitary");
  if (generator_->rows() != matrix_.rows() ||
      hermiticity_error(*generator_) > kMatrixTol) {
    throw std::invalid_argument(
        "ScatteringUnitary: generator must be Hermitian of matching size");
  }
}

ScatteringUnitary ScatteringUnitary::from_generator(const CMatrix& h) {
  if (h.rows() != h.cols() || hermiticity_error(h) > kMatrixTol) {
    throw std::invalid_argument(
        "ScatteringUnitary::from_generator: generator must be Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(h);
  const CMatrix s = eig.eigenvectors() *
                    (Complex(0, 1) * eig.eigenvalues().array().cast<Complex>())
                        .exp()
                        .matrix()
                        .asDiagonal() *
                    eig.eigenvectors().adjoint();
  return ScatteringUnitary(s, h);
}

CMatrix two_mode_scattering(double alpha, double beta, double gamma) {
  const double c = std::cos(beta / 2);
  const double s = std::sin(beta / 2);
  const Complex ip = Complex(0, 0.5);
  CMatrix out(2, 2);
  out(0, 0) = std::exp(ip * (alpha + gamma)) * c;
  out(0, 1) = std::exp(ip * (alpha - gamma)) * s;
  out(1, 0) = -std::exp(-ip * (alpha - gamma)) * s;
  out(1, 1) = std::exp(-ip * (alpha + gamma)) * c;
  return out;
}

CMatrix submatrix_for_transition(const CMatrix& s, const FockState& in,
                                 const FockState& out) {
  const int m = static_cast<int>(s.rows());
  if (static_cast<int>(in.occupations.size()) != m ||
      static_cast<int>(out.occupations.size()) != m) {
    throw std::invalid_argument(
        "submatrix_for_transition: occupation length must match mode count");
  }
  const int n = FockState(in).total();
  if (n != FockState(out).total()) {
    throw std::invalid_argument(
        "submatrix_for_transition: photon numbers must match");
  }
  std::vector<int> cols;
  cols.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i) {
    for (int r = 0; r < in.occupations[static_cast<std::size_t>(i)]; ++r) {
      cols.push_back(i);
    }
  }
  std::vector<int> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < m; ++j) {
    for (int r = 0; r < out.occupations[static_cast<std::size_t>(j)]; ++r) {
      rows.push_back(j);
    }
  }
  CMatrix sub(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      sub(r, c) = s(rows[static_cast<std::size_t>(r)],
                    cols[static_cast<std::size_t>(c)]);
    }
  }
  return sub;
}

MultiPhotonUnitary::MultiPhotonUnitary(CMatrix matrix,
                                       std::shared_ptr<const FockBasis> basis,
                                       bool lifted)
    : matrix_(std::move(matrix)), basis_(std::move(basis)), lifted_(lifted) {
  if (!basis_) {
    throw std::invalid_argument("MultiPhotonUnitary: basis must be set");
  }
  if (matrix_.rows() != basis_->dim() || matrix_.cols() != basis_->dim()) {
    throw std::invalid_argument(
        "MultiPhotonUnitary: matrix size must match basis dimension");
  }
  if (unitarity_error(matrix_) > kMatrixTol) {
    throw std::invalid_argument("MultiPhotonUnitary: matrix is not unitary");
  }
}

MultiPhotonUnitary photonic_homomorphism(const ScatteringUnitary& s,
                                         int photons, int max_dim) {
  if (photons < 0 || photons > kMaxPhotons) {
    throw std::invalid_argument(
        "photonic_homomorphism: photons must be in [0, 20]");
  }
  auto basis = std::make_shared<const FockBasis>(
      enumerate_fock_basis(photons, s.modes(), max_dim));
  const int dim = basis->dim();
  CMatrix v(dim, dim);
  std::vector<double> norms(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    double prod = 1.0;
    for (int occ : basis->state(i).occupations) prod *= factorial(occ);
    norms[static_cast<std::size_t>(i)] = prod;
  }
  for (int b = 0; b < dim; ++b) {
    for (int a = 0; a < dim; ++a) {
      const CMatrix sub =
          submatrix_for_transition(s.matrix(), basis->state(a), basis->state(b));
      v(b, a) = permanent(sub) /
                std::sqrt(norms[static_cast<std::size_t>(b)] *
                          norms[static_cast<std::size_t>(a)]);
    }
  }
  return MultiPhotonUnitary(std::move(v), std::move(basis), true);
}

MultiPhotonUnitary photonic_homomorphism(const CMatrix& s, int photons,
                                         int max_dim) {
  return photonic_homomorphism(ScatteringUnitary(s), photons, max_dim);
}

}  // namespace lonsim
