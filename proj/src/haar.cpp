/**
 * This code is part of lonsim.
 *
 * (C) Copyright the lonsim developers 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "lonsim/haar.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/QR>

namespace lonsim {

double HaarU2Params::phi() const { return std::asin(std::sqrt(xi)); }

Eigen::Matrix2cd u2_from_params(const HaarU2Params& params) {
  if (params.xi < 0.0 || params.xi > 1.0) {
    throw std::invalid_argument("u2_from_params: xi must lie in [0, 1]");
  }
  const double phi = params.phi();
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  const Complex global = std::polar(1.0, params.alpha);
  Eigen::Matrix2cd u;
  u(0, 0) = std::polar(c, params.psi);
  u(0, 1) = std::polar(s, params.chi);
  u(1, 0) = -std::polar(s, -params.chi);
  u(1, 1) = std::polar(c, -params.psi);
  return global * u;
}

HaarU2Sample sample_haar_u2(std::mt19937_64& rng) {
  const double two_pi = 2.0 * std::numbers::pi;
  std::uniform_real_distribution<double> angle(0.0, two_pi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  HaarU2Sample out;
  // Draw order is part of the reproducibility contract: psi, chi, xi, alpha.
  out.params.psi = angle(rng);
  out.params.chi = angle(rng);
  out.params.xi = unit(rng);
  out.params.alpha = angle(rng);
  out.matrix = u2_from_params(out.params);
  return out;
}

CMatrix haar_unitary(int dim, std::mt19937_64& rng) {
  if (dim < 1) throw std::invalid_argument("haar_unitary: dim must be >= 1");
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = Complex(re, im);
    }
  }
  const Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fixing the phases of the R diagonal makes the factorization unique and
  // the resulting Q exactly Haar distributed.
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    const Complex phase = mag > 0.0 ? d / mag : Complex(1.0);
    q.col(j) *= phase;
  }
  return q;
}

Eigen::Matrix2cd NamedUnitary::plate_matrix() const {
  const double rad = std::numbers::pi / 180.0;
  return qhq_unitary(theta1_deg * rad, theta2_deg * rad, theta3_deg * rad);
}

const std::vector<NamedUnitary>& experiment_unitaries() {
  static const std::vector<NamedUnitary> table = [] {
    const double h = std::numbers::pi / 2.0;
    const double th = 3.0 * std::numbers::pi / 2.0;
    const double third = 1.0 / 3.0;
    const double two_thirds = 2.0 / 3.0;
    struct Row {
      const char* name;
      double psi, chi, xi;
      double t1, t2, t3;
    };
    const Row rows[] = {
        {"U1", h, h, third, 24.1, 17.6, 101.2},
        {"U2", h, h, two_thirds, 149.5, 27.4, 175.2},
        {"U3", h, th, third, 78.8, 162.4, 155.9},
        {"U4", h, th, two_thirds, 4.8, 152.6, 30.5},
        {"U5", th, h, third, 27.4, 72.4, 27.4},
        {"U6", th, h, two_thirds, 81.9, 62.6, 133.3},
        {"U7", th, th, third, 152.6, 107.6, 152.6},
        {"U8", th, th, two_thirds, 98.1, 117.4, 46.7},
    };
    std::vector<NamedUnitary> out;
    out.reserve(8);
    for (const Row& row : rows) {
      NamedUnitary u;
      u.name = row.name;
      u.params = {row.psi, row.chi, row.xi, 0.0};
      u.matrix = u2_from_params(u.params);
      u.theta1_deg = row.t1;
      u.theta2_deg = row.t2;
      u.theta3_deg = row.t3;
      out.push_back(std::move(u));
    }
    return out;
  }();
  return table;
}

}  // namespace lonsim
