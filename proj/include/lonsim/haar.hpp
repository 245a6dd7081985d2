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

#include <random>
#include <string>
#include <vector>

#include "lonsim/types.hpp"
#include "lonsim/waveplates.hpp"

namespace lonsim {

/**
 * Haar parameterization of U(2): psi, chi, alpha uniform on [0, 2 pi),
 * xi uniform on [0, 1], phi = arcsin(sqrt(xi)), and
 *
 *   U = e^{i alpha} [  e^{i psi} cos(phi)   e^{i chi} sin(phi) ]
 *                   [ -e^{-i chi} sin(phi)  e^{-i psi} cos(phi) ]
 */
struct HaarU2Params {
  double psi = 0.0;
  double chi = 0.0;
  double xi = 0.0;
  double alpha = 0.0;

  double phi() const;
};

Eigen::Matrix2cd u2_from_params(const HaarU2Params& params);

struct HaarU2Sample {
  HaarU2Params params;
  Eigen::Matrix2cd matrix;
};

/// Draws one Haar-distributed U(2) element with its parameters.
HaarU2Sample sample_haar_u2(std::mt19937_64& rng);

/// Haar-distributed U(dim) via QR of a complex Ginibre matrix with the
/// phases of the R diagonal absorbed into Q.
CMatrix haar_unitary(int dim, std::mt19937_64& rng);

/**
 * A named two-mode unitary with its Haar parameters and the plate angles
 * (degrees) that realize it up to a global phase.
 */
struct NamedUnitary {
  std::string name;
  HaarU2Params params;
  Eigen::Matrix2cd matrix;
  double theta1_deg = 0.0;
  double theta2_deg = 0.0;
  double theta3_deg = 0.0;

  Eigen::Matrix2cd plate_matrix() const;
};

/**
 * The eight bundled reference unitaries U1..U8: all sign choices of
 * psi, chi in {pi/2, 3 pi/2} and xi in {1/3, 2/3} with alpha = 0, each with
 * rounded plate angles that realize it to about 1e-3.
 */
const std::vector<NamedUnitary>& experiment_unitaries();

}  // namespace lonsim
