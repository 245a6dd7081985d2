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

#include <cstdint>
#include <random>
#include <vector>

#include "lonsim/density.hpp"

namespace lonsim {

/**
 * Direct estimate of the traceless tangent invariant from photon-counting
 * observable means, without tomography.
 */
struct DirectItprime {
  double value = 0.0;
  double std_error = 0.0;
  /// Means of the measured observables, in measurement order.
  std::vector<double> observable_means;
};

/**
 * Exact direct measurement for any mode count: the means tr(rho O_i) of the
 * mode-occupation and two-mode interference observables give
 * i_t_prime = (sum_i <O_i>^2 - n^2/m) / binom(m + n, m + 1).
 */
DirectItprime direct_measure_itprime_exact(const DensityState& state);

/**
 * Shot-based direct measurement for two polarization modes. Three wave-plate
 * frames (none, a half-wave plate at 22.5 degrees, and that plate after a
 * quarter-wave plate at 0 degrees) rotate the photon-number difference
 * D = (n_1 - n_2)/sqrt(2) into the three traceless observable directions;
 * each frame is sampled for `shots` two-photon events and
 * i_t_prime = sum_i <O_i>^2 / binom(m + n, m + 1) with the error propagated
 * through the squares.
 *
 * shots = 0 selects the exact path above; otherwise shots >= 3 is required
 * (throws std::invalid_argument) and the state must have two modes.
 */
DirectItprime direct_measure_itprime(const DensityState& state,
                                     std::uint64_t shots,
                                     std::mt19937_64& rng);

}  // namespace lonsim
