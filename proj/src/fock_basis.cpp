/**
 * This code is part of lonsim.
 *
 * (C) Copyright the lonsim developers 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "lonsim/fock_basis.hpp"

#include <array>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lonsim {

namespace {

std::string occupation_key(const std::vector<int>& occupations) {
  std::string key;
  key.reserve(occupations.size() * 3);
  for (int n : occupations) {
    key += std::to_string(n);
    key += ',';
  }
  return key;
}

}  // namespace

int FockState::total() const {
  return std::accumulate(occupations.begin(), occupations.end(), 0);
}

std::string to_string(const FockState& state) {
  std::ostringstream out;
  out << '|';
  for (std::size_t i = 0; i < state.occupations.size(); ++i) {
    if (i) out << ',';
    out << state.occupations[i];
  }
  out << '>';
  return out.str();
}

std::uint64_t binomial(int a, int b) {
  if (b < 0 || b > a || a < 0) return 0;
  b = std::min(b, a - b);
  const std::uint64_t limit = std::uint64_t(1) << 62;
  std::uint64_t result = 1;
  for (int i = 1; i <= b; ++i) {
    // result * (a - b + i) / i is integral at every step.
    const std::uint64_t num = static_cast<std::uint64_t>(a - b + i);
    if (result > limit / num) {
      throw std::overflow_error("binomial: result exceeds 2^62");
    }
    result = result * num / static_cast<std::uint64_t>(i);
  }
  return result;
}

double factorial(int n) {
  if (n < 0 || n > kMaxPhotons) {
    throw std::invalid_argument("factorial: argument outside [0, 20]");
  }
  static const std::array<double, kMaxPhotons + 1> table = [] {
    std::array<double, kMaxPhotons + 1> t{};
    t[0] = 1.0;
    for (int i = 1; i <= kMaxPhotons; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  return table[static_cast<std::size_t>(n)];
}

FockBasis::FockBasis(int photons, int modes, std::vector<FockState> states)
    : photons_(photons), modes_(modes), states_(std::move(states)) {
  index_.reserve(states_.size());
  for (std::size_t i = 0; i < states_.size(); ++i) {
    index_.emplace(occupation_key(states_[i].occupations),
                   static_cast<int>(i));
  }
}

int FockBasis::index_of(const std::vector<int>& occupations) const {
  auto it = index_.find(occupation_key(occupations));
  if (it == index_.end()) {
    throw std::out_of_range("FockBasis: occupation vector not in basis");
  }
  return it->second;
}

FockBasis enumerate_fock_basis(int photons, int modes, int max_dim) {
  if (modes < 1) {
    throw std::invalid_argument("enumerate_fock_basis: modes must be >= 1");
  }
  if (photons < 0 || photons > kMaxPhotons) {
    throw std::invalid_argument(
        "enumerate_fock_basis: photons must be in [0, 20]");
  }
  const std::uint64_t dim = binomial(modes + photons - 1, photons);
  if (dim > static_cast<std::uint64_t>(max_dim)) {
    throw std::length_error("enumerate_fock_basis: sector dimension " +
                            std::to_string(dim) + " exceeds cap " +
                            std::to_string(max_dim));
  }

  std::vector<FockState> states;
  states.reserve(dim);
  std::vector<int> current(static_cast<std::size_t>(modes), 0);
  // Depth-first walk assigning each mode the largest remainder first yields
  // strictly decreasing lexicographic order.
  auto recurse = [&](auto&& self, int mode, int remaining) -> void {
    if (mode == modes - 1) {
      current[static_cast<std::size_t>(mode)] = remaining;
      states.push_back(FockState{current});
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      current[static_cast<std::size_t>(mode)] = k;
      self(self, mode + 1, remaining - k);
    }
  };
  recurse(recurse, 0, photons);
  return FockBasis(photons, modes, std::move(states));
}

}  // namespace lonsim
