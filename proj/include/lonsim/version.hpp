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

#include <string_view>

namespace lonsim {

inline constexpr std::string_view kVersion = "0.1.0";

// Bumped whenever the canonical element ordering of any basis or frame
// changes; cached frames are keyed on it.
inline constexpr int kOrderingVersion = 1;

}  // namespace lonsim
