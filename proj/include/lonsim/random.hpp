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
#include <string>
#include <vector>

#include "lonsim/types.hpp"

namespace lonsim {

/**
 * Stream seed for an indexed trial, splitmix64 applied to master ^ f(index).
 * Trials seeded this way are reproducible independently of execution order.
 */
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Uniformly random pure state amplitudes (complex Gaussian, normalized).
CVector random_pure(int dim, std::mt19937_64& rng);

/// Random full-rank density matrix G G^dag / tr(G G^dag), G complex Ginibre.
CMatrix random_density(int dim, std::mt19937_64& rng);

/**
 * Multinomial draw of `trials` outcomes with the given probabilities, via a
 * chain of conditional binomial draws. Probabilities must be non-negative;
 * they are normalized internally.
 */
std::vector<long> multinomial(long trials, const RVector& probs,
                              std::mt19937_64& rng);

/// FNV-1a 64-bit hash of a byte string, used for config and content hashes.
std::uint64_t fnv1a64(const void* data, std::size_t size);
std::uint64_t fnv1a64(const std::string& text);

}  // namespace lonsim
