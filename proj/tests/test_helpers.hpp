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

#include <map>
#include <random>
#include <utility>

#include "lonsim/frame.hpp"
#include "lonsim/haar.hpp"
#include "lonsim/random.hpp"
#include "lonsim/types.hpp"

namespace lonsim::test {

// Master seed for every randomized check in the unit suite.
inline constexpr std::uint64_t kTestSeed = 20260821ull;

inline std::mt19937_64 seeded_rng(std::uint64_t stream) {
  return std::mt19937_64(derive_seed(kTestSeed, stream));
}

// Frames are immutable, so the suite shares one instance per sector.
inline FramePtr shared_frame(int photons, int modes) {
  static std::map<std::pair<int, int>, FramePtr> cache;
  auto key = std::make_pair(photons, modes);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, build_frame_shared(photons, modes)).first;
  }
  return it->second;
}

inline double matrix_distance(const CMatrix& a, const CMatrix& b) {
  return max_abs((a - b).eval());
}

}  // namespace lonsim::test
