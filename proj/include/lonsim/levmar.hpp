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

#include <functional>

#include "lonsim/types.hpp"

namespace lonsim {

struct LevMarOptions {
  int max_iterations = 400;
  double initial_damping = 1e-3;
  /// Stop when the squared-residual improvement falls below this.
  double cost_tol = 1e-16;
  /// Stop when the step max-norm falls below this.
  double step_tol = 1e-12;
  /// Forward-difference step for the numeric Jacobian.
  double jacobian_step = 1e-7;
};

struct LevMarResult {
  RVector x;
  double cost = 0.0;
  int iterations = 0;
  bool converged = false;
};

/**
 * Small dense Levenberg-Marquardt solver for nonlinear least squares,
 * minimizing |r(x)|^2 with a forward-difference Jacobian. Suited to the
 * few-parameter fits in this library (plate-angle decomposition, dip model,
 * constrained tomography refinement).
 */
LevMarResult levenberg_marquardt(
    const std::function<RVector(const RVector&)>& residual, RVector x0,
    const LevMarOptions& options = {});

}  // namespace lonsim
