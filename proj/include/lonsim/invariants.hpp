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

#include "lonsim/density.hpp"

namespace lonsim {

/**
 * Purity-like functionals of a state's frame coordinates. Each term is a
 * sum of squared coordinates over one part of the frame, so each is
 * conserved under every lossless network:
 *
 *   i_n       = coeffs[0]^2 = 1/M
 *   i_t_prime = sum over traceless tangent part
 *   i_t       = i_n + i_t_prime
 *   i_p       = sum over perpendicular part
 *   i_o       = sum of squared expectations of the m^2 unnormalized mode
 *               observables (number, symmetric, antisymmetric)
 *
 * i_t + i_p equals the purity tr(rho^2).
 */
struct InvariantSet {
  double i_n = 0.0;
  double i_t_prime = 0.0;
  double i_t = 0.0;
  double i_p = 0.0;
  double i_o = 0.0;
  double purity = 0.0;
};

/**
 * Computes the invariant set of a state. i_o is evaluated both directly
 * from observable expectations and through the linear relation
 * i_o = C(m+n, m+1) i_t_prime + n^2/m; a std::runtime_error reports any
 * disagreement above 1e-10, as do violations of i_n = 1/M, of
 * i_t + i_p = purity (within 1e-9) and, on two-mode sectors, of the
 * i_t_prime range bound.
 */
InvariantSet invariants(const DensityState& state);

/**
 * Attainable range of i_t_prime on a two-mode n-photon sector:
 * [0, 3n/((n+1)(n+2))]. sphere_radius is the square root of the upper
 * edge, the radius of the coordinate ball reached by pure states.
 */
struct ItprimeRange {
  double lo = 0.0;
  double hi = 0.0;
  double sphere_radius = 0.0;
};

/// Throws std::invalid_argument for photons < 1.
ItprimeRange itprime_range(int photons);

/**
 * Minimum number of interferometer settings that make single-outcome
 * photon counting tomographically complete on the n-photon sector of m
 * modes: C(n+m, n) - C(n+m-2, m).
 */
std::uint64_t min_tomography_settings(int photons, int modes);

}  // namespace lonsim
