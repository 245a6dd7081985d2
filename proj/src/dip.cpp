/**
 * This code is part of lonsim.
 *
 * (C) Copyright the lonsim developers 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "lonsim/dip.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lonsim/levmar.hpp"

namespace lonsim {

namespace {

double sinc(double z) {
  if (std::abs(z) < 1e-8) return 1.0 - z * z / 6.0;
  return std::sin(z) / z;
}

}  // namespace

double DipModel::operator()(double x) const {
  const double d = x - x0;
  return a - b * std::exp(-sigma * sigma * d * d / 2.0) * sinc(k * d);
}

double hom_dip(double delay, const DipModel& model) { return model(delay); }

RVector hom_dip(const RVector& delays, const DipModel& model) {
  RVector out(delays.size());
  for (Eigen::Index i = 0; i < delays.size(); ++i) {
    out(i) = model(delays(i));
  }
  return out;
}

DipFit fit_hom_dip(const RVector& delays, const RVector& rates) {
  if (delays.size() != rates.size()) {
    throw std::invalid_argument("fit_hom_dip: input lengths differ");
  }
  if (delays.size() < 6) {
    throw std::invalid_argument("fit_hom_dip: need at least six samples");
  }
  const Eigen::Index count = delays.size();

  // Baseline from the scan edges, depth and position from the minimum.
  const Eigen::Index edge = std::max<Eigen::Index>(
      1, std::min<Eigen::Index>(5, count / 2));
  double baseline = 0.0;
  for (Eigen::Index i = 0; i < edge; ++i) {
    baseline += rates(i) + rates(count - 1 - i);
  }
  baseline /= double(2 * edge);
  Eigen::Index min_index = 0;
  rates.minCoeff(&min_index);
  const double depth = std::max(baseline - rates(min_index), 1e-6);

  RVector x0(5);
  x0 << baseline, depth, 1.0, delays(min_index), 1.5;

  const auto residual_fn = [&](const RVector& x) {
    const DipModel candidate{x(0), x(1), x(2), x(3), x(4)};
    RVector r(count);
    for (Eigen::Index i = 0; i < count; ++i) {
      r(i) = candidate(delays(i)) - rates(i);
    }
    return r;
  };

  const LevMarResult solution = levenberg_marquardt(residual_fn, x0);
  DipFit fit;
  // The model is even in sigma and k, so their signs are reported positive.
  fit.model = DipModel{solution.x(0), solution.x(1), std::abs(solution.x(2)),
                       solution.x(3), std::abs(solution.x(4))};
  fit.residual = std::sqrt(solution.cost / double(count));
  fit.iterations = solution.iterations;
  fit.converged = solution.converged;
  return fit;
}

}  // namespace lonsim
