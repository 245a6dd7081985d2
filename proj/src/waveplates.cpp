/**
 * This code is part of lonsim.
 *
 * (C) Copyright the lonsim developers 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "lonsim/waveplates.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "lonsim/levmar.hpp"

namespace lonsim {

namespace {

Eigen::Matrix2d rotation(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Eigen::Matrix2d r;
  r << c, -s, s, c;
  return r;
}

Eigen::Matrix2cd retarder(double angle, Complex slow_phase) {
  Eigen::Matrix2cd d = Eigen::Matrix2cd::Zero();
  d(0, 0) = 1.0;
  d(1, 1) = slow_phase;
  const Eigen::Matrix2d r = rotation(angle);
  return r.cast<Complex>() * d * r.transpose().cast<Complex>();
}

double wrap_half_turn(double angle) {
  const double pi = std::numbers::pi;
  double wrapped = std::fmod(angle, pi);
  if (wrapped < 0.0) wrapped += pi;
  return wrapped;
}

}  // namespace

Eigen::Matrix2cd jones(const WavePlate& plate) {
  const Complex slow =
      plate.kind == WavePlateKind::quarter ? Complex(0.0, -1.0) : Complex(-1.0);
  return retarder(plate.angle, slow);
}

Eigen::Matrix2cd quarter_wave(double angle) {
  return jones({WavePlateKind::quarter, angle});
}

Eigen::Matrix2cd half_wave(double angle) {
  return jones({WavePlateKind::half, angle});
}

Eigen::Matrix2cd qhq_unitary(double theta1, double theta2, double theta3) {
  return quarter_wave(theta3) * half_wave(theta2) * quarter_wave(theta1);
}

double phase_distance(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("phase_distance: shape mismatch");
  }
  const Complex overlap = (b.adjoint() * a).trace();
  const double phi = overlap == Complex(0.0) ? 0.0 : -std::arg(overlap);
  const Complex phase = std::polar(1.0, phi);
  return max_abs(CMatrix(phase * a - b));
}

QhqAngles qhq_decompose(const Eigen::Matrix2cd& u) {
  if (unitarity_error(CMatrix(u)) > kMatrixTol) {
    throw std::invalid_argument("qhq_decompose: input is not unitary");
  }
  const double pi = std::numbers::pi;

  // Coarse 5 degree grid over the half-turn cube picks the basin; the
  // refinement below converges quadratically inside it.
  const int steps = 36;
  const double step = pi / steps;
  QhqAngles best;
  best.residual = std::numeric_limits<double>::infinity();
  for (int i = 0; i < steps; ++i) {
    for (int j = 0; j < steps; ++j) {
      for (int k = 0; k < steps; ++k) {
        const double t1 = i * step;
        const double t2 = j * step;
        const double t3 = k * step;
        const double d = phase_distance(qhq_unitary(t1, t2, t3), u);
        if (d < best.residual) {
          best = {t1, t2, t3, d};
        }
      }
    }
  }

  const auto residual_fn = [&u](const RVector& x) {
    const Eigen::Matrix2cd a = qhq_unitary(x(0), x(1), x(2));
    const Complex overlap = (u.adjoint() * a).trace();
    const double phi = overlap == Complex(0.0) ? 0.0 : -std::arg(overlap);
    const Complex phase = std::polar(1.0, phi);
    const Eigen::Matrix2cd diff = phase * a - u;
    RVector r(8);
    for (int row = 0; row < 2; ++row) {
      for (int col = 0; col < 2; ++col) {
        r(4 * row + 2 * col) = diff(row, col).real();
        r(4 * row + 2 * col + 1) = diff(row, col).imag();
      }
    }
    return r;
  };

  RVector x0(3);
  x0 << best.theta1, best.theta2, best.theta3;
  const LevMarResult fit = levenberg_marquardt(residual_fn, x0);

  QhqAngles refined;
  refined.theta1 = wrap_half_turn(fit.x(0));
  refined.theta2 = wrap_half_turn(fit.x(1));
  refined.theta3 = wrap_half_turn(fit.x(2));
  refined.residual = phase_distance(
      qhq_unitary(refined.theta1, refined.theta2, refined.theta3), u);
  if (refined.residual > best.residual) refined = best;

  if (refined.residual > 1e-6) {
    std::ostringstream msg;
    msg << "qhq_decompose: residual " << refined.residual
        << " above 1e-6 after refinement";
    throw std::runtime_error(msg.str());
  }
  return refined;
}

}  // namespace lonsim
