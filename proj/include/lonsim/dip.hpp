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

#include <vector>

#include "lonsim/types.hpp"

namespace lonsim {

/**
 * Coincidence-rate model for a two-photon interference dip scanned over
 * relative delay x:
 *
 *   p(x) = a - b * exp(-sigma^2 (x - x0)^2 / 2) * sinc(k (x - x0))
 *
 * with sinc(z) = sin(z)/z and sinc(0) = 1. a is the baseline rate, b the
 * dip depth, sigma the spectral width, x0 the zero-delay position and k the
 * detuning wavenumber.
 */
struct DipModel {
  double a = 1.0;
  double b = 1.0;
  double sigma = 1.0;
  double x0 = 0.0;
  double k = 0.0;

  /// Interference visibility b / a.
  double visibility() const { return b / a; }
  double operator()(double x) const;
};

/// Model evaluated at one delay.
double hom_dip(double delay, const DipModel& model);

/// Model evaluated over a delay grid.
RVector hom_dip(const RVector& delays, const DipModel& model);

struct DipFit {
  DipModel model;
  /// Root-mean-square residual of the fit.
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

/**
 * Least-squares fit of the dip model to sampled rates. Initial guesses are
 * derived from the data (baseline from the edges, depth and position from
 * the minimum) and refined by Levenberg-Marquardt. Requires at least six
 * samples (throws std::invalid_argument) and equal-length inputs.
 */
DipFit fit_hom_dip(const RVector& delays, const RVector& rates);

}  // namespace lonsim
