/**
 * This code is part of lonsim.
 *
 * (C) Copyright the lonsim developers 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "lonsim/direct_measurement.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lonsim/random.hpp"
#include "lonsim/scattering.hpp"
#include "lonsim/waveplates.hpp"

namespace lonsim {

DirectItprime direct_measure_itprime_exact(const DensityState& state) {
  const HermitianFrame& frame = state.frame();
  const int m = frame.modes();
  const int n = frame.photons();

  DirectItprime out;
  out.observable_means.reserve(static_cast<std::size_t>(m) * m);
  double sum_sq = 0.0;
  for (const CMatrix& observable : frame.observables()) {
    const double mean = (state.rho() * observable).trace().real();
    out.observable_means.push_back(mean);
    sum_sq += mean * mean;
  }
  const double scale = double(binomial(m + n, m + 1));
  out.value = (sum_sq - double(n) * n / m) / scale;
  out.std_error = 0.0;
  return out;
}

DirectItprime direct_measure_itprime(const DensityState& state,
                                     std::uint64_t shots,
                                     std::mt19937_64& rng) {
  if (shots == 0) return direct_measure_itprime_exact(state);
  if (shots < 3) {
    throw std::invalid_argument(
        "direct_measure_itprime: need at least 3 shots per frame");
  }
  const HermitianFrame& frame = state.frame();
  if (frame.modes() != 2) {
    throw std::invalid_argument(
        "direct_measure_itprime: sampled path requires two modes");
  }
  const int n = frame.photons();
  const int dim = frame.dim();
  const double rad = std::numbers::pi / 180.0;

  // Plate trains whose conjugation rotates the photon-number difference
  // (n_1 - n_2)/sqrt(2) into the three traceless mode directions.
  const Eigen::Matrix2cd frames[3] = {
      Eigen::Matrix2cd::Identity(),
      half_wave(22.5 * rad),
      half_wave(22.5 * rad) * quarter_wave(0.0),
  };

  // Counting outcomes: basis state (n_1, n_2) reads (n_1 - n_2)/sqrt(2).
  RVector outcome_values(dim);
  for (int i = 0; i < dim; ++i) {
    const auto& occ = frame.basis().state(i).occupations;
    outcome_values(i) = (occ[0] - occ[1]) / std::sqrt(2.0);
  }

  DirectItprime out;
  out.observable_means.reserve(3);
  double value = 0.0;
  double variance = 0.0;
  const double scale = double(binomial(2 + n, 3));
  for (const Eigen::Matrix2cd& plate : frames) {
    const MultiPhotonUnitary lifted =
        photonic_homomorphism(CMatrix(plate), n);
    const CMatrix rotated =
        lifted.matrix() * state.rho() * lifted.matrix().adjoint();
    RVector probs(dim);
    for (int i = 0; i < dim; ++i) {
      probs(i) = std::max(rotated(i, i).real(), 0.0);
    }
    const std::vector<long> counts =
        multinomial(static_cast<long>(shots), probs, rng);

    double sum = 0.0;
    double sum_sq = 0.0;
    for (int i = 0; i < dim; ++i) {
      sum += double(counts[static_cast<std::size_t>(i)]) * outcome_values(i);
      sum_sq += double(counts[static_cast<std::size_t>(i)]) *
                outcome_values(i) * outcome_values(i);
    }
    const double mean = sum / double(shots);
    const double sample_var =
        (sum_sq - double(shots) * mean * mean) / double(shots - 1);
    const double mean_var = std::max(sample_var, 0.0) / double(shots);

    out.observable_means.push_back(mean);
    value += mean * mean;
    // var(mean^2) ~ (2 mean)^2 var(mean) to first order.
    variance += 4.0 * mean * mean * mean_var;
  }
  out.value = value / scale;
  out.std_error = std::sqrt(variance) / scale;
  return out;
}

}  // namespace lonsim
