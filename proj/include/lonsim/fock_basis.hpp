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
#include <string>
#include <unordered_map>
#include <vector>

#include "lonsim/types.hpp"

namespace lonsim {

/// Occupation-number state of n photons in m modes.
struct FockState {
  std::vector<int> occupations;

  int total() const;
  bool operator==(const FockState& other) const = default;
};

/// Renders occupations as "|2,0,1>".
std::string to_string(const FockState& state);

/// Binomial coefficient with the usual conventions: C(a,b) = 0 for b < 0 or
/// b > a. Throws std::overflow_error when the result exceeds 2^62.
std::uint64_t binomial(int a, int b);

/**
 * Ordered basis of the n-photon sector of m modes, dimension
 * M = C(m+n-1, n). States are held in strictly decreasing lexicographic
 * order of their occupation vectors, so (n,0,...,0) is first and
 * (0,...,0,n) is last. All multiphoton matrices in this library are
 * written in this order.
 */
class FockBasis {
 public:
  FockBasis(int photons, int modes, std::vector<FockState> states);

  int photons() const { return photons_; }
  int modes() const { return modes_; }
  int dim() const { return static_cast<int>(states_.size()); }

  const std::vector<FockState>& states() const { return states_; }
  const FockState& state(int index) const { return states_.at(index); }

  /// Index of an occupation vector; throws std::out_of_range if absent.
  int index_of(const std::vector<int>& occupations) const;

 private:
  int photons_;
  int modes_;
  std::vector<FockState> states_;
  std::unordered_map<std::string, int> index_;
};

/**
 * Enumerates the canonical n-photon basis on m modes.
 *
 * Throws std::invalid_argument for modes < 1 or photons < 0 and
 * std::length_error when the dimension would exceed max_dim.
 */
FockBasis enumerate_fock_basis(int photons, int modes,
                               int max_dim = kDefaultDimCap);

/// n! for n <= kMaxPhotons, from a precomputed table.
double factorial(int n);

}  // namespace lonsim
