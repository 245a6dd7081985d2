/**
 * This code is part of lonsim.
 *
 * (C) Copyright the lonsim developers 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "lonsim/levmar.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Cholesky>

namespace lonsim {

namespace {

RMatrix numeric_jacobian(const std::function<RVector(const RVector&)>& residual,
                         const RVector& x, const RVector& r0, double step) {
  const Eigen::Index n = x.size();
  const Eigen::Index m = r0.size();
  RMatrix jac(m, n);
  RVector probe = x;
  for (Eigen::Index j = 0; j < n; ++j) {
    const double h = step * std::max(1.0, std::abs(x(j)));
    probe(j) = x(j) + h;
    const RVector rp = residual(probe);
    if (rp.size() != m) {
      throw std::invalid_argument(
          "levenberg_marquardt: residual size changed between calls");
    }
    jac.col(j) = (rp - r0) / h;
    probe(j) = x(j);
  }
  return jac;
}

}  // namespace

LevMarResult levenberg_marquardt(
    const std::function<RVector(const RVector&)>& residual, RVector x0,
    const LevMarOptions& options) {
  if (x0.size() == 0) {
    throw std::invalid_argument("levenberg_marquardt: empty parameter vector");
  }

  LevMarResult result;
  result.x = std::move(x0);
  RVector r = residual(result.x);
  if (r.size() == 0) {
    throw std::invalid_argument("levenberg_marquardt: empty residual");
  }
  result.cost = r.squaredNorm();
  result.iterations = 0;
  result.converged = false;

  double damping = options.initial_damping;
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    result.iterations = iter + 1;
    const RMatrix jac =
        numeric_jacobian(residual, result.x, r, options.jacobian_step);
    const RMatrix jtj = jac.transpose() * jac;
    const RVector jtr = jac.transpose() * r;

    bool stepped = false;
    for (int attempt = 0; attempt < 25; ++attempt) {
      RMatrix normal = jtj;
      for (Eigen::Index i = 0; i < normal.rows(); ++i) {
        normal(i, i) += damping * std::max(jtj(i, i), 1e-12);
      }
      const RVector delta = normal.ldlt().solve(-jtr);
      if (!delta.allFinite()) {
        damping *= 10.0;
        continue;
      }
      const RVector trial = result.x + delta;
      const RVector r_trial = residual(trial);
      const double cost_trial = r_trial.squaredNorm();
      if (cost_trial < result.cost) {
        const double improvement = result.cost - cost_trial;
        const double step_norm = delta.lpNorm<Eigen::Infinity>();
        result.x = trial;
        r = r_trial;
        result.cost = cost_trial;
        damping = std::max(damping * 0.5, 1e-14);
        stepped = true;
        if (improvement < options.cost_tol || step_norm < options.step_tol) {
          result.converged = true;
        }
        break;
      }
      damping *= 10.0;
      if (damping > 1e14) break;
    }
    if (result.converged) break;
    if (!stepped) {
      // No damping level produced a decrease; the iterate is at a local
      // minimum to within the numeric Jacobian's resolution.
      result.converged = true;
      break;
    }
  }
  return result;
}

}  // namespace lonsim
