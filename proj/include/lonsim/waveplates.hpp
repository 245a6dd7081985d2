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

#include "lonsim/types.hpp"

namespace lonsim {

enum class WavePlateKind { quarter, half };

/// Wave plate with its fast axis at `angle` radians from horizontal.
struct WavePlate {
  WavePlateKind kind = WavePlateKind::quarter;
  double angle = 0.0;
};

/**
 * Jones matrix of a wave plate on the (H, V) mode pair:
 *
 *   Q(t) = R(t) diag(1, -i) R(-t)      quarter wave
 *   H(t) = R(t) diag(1, -1) R(-t)      half wave
 *
 * with R(t) the real rotation by t. The retardance sign is a global
 * convention of this library; it is fixed so that
 * Q(45 deg) H(beta) Q(45 deg) = diag(e^{i 2 beta}, -e^{-i 2 beta})
 * holds up to a global phase. H(22.5 deg) is the Hadamard matrix exactly.
 */
Eigen::Matrix2cd jones(const WavePlate& plate);

Eigen::Matrix2cd quarter_wave(double angle);
Eigen::Matrix2cd half_wave(double angle);

/// Q(theta3) H(theta2) Q(theta1), the plate train in traversal order.
Eigen::Matrix2cd qhq_unitary(double theta1, double theta2, double theta3);

/**
 * Distance between same-shape matrices up to a global phase: the max-norm
 * of e^{i phi} A - B at the Frobenius-optimal phase phi = -arg tr(B^dag A).
 * Zero exactly when A and B agree up to phase.
 */
double phase_distance(const CMatrix& a, const CMatrix& b);

struct QhqAngles {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double theta3 = 0.0;
  /// phase_distance between the realized train and the target.
  double residual = 0.0;
};

/**
 * Finds plate angles realizing a 2 x 2 unitary up to a global phase, by a
 * coarse grid over [0, pi)^3 followed by a damped least-squares refinement.
 * Angles are reported in [0, pi). Throws std::runtime_error when the
 * refined residual stays above 1e-6.
 */
QhqAngles qhq_decompose(const Eigen::Matrix2cd& u);

}  // namespace lonsim
