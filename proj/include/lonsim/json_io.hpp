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

#include <nlohmann/json.hpp>

#include "lonsim/density.hpp"
#include "lonsim/fock_basis.hpp"
#include "lonsim/frame.hpp"
#include "lonsim/invariants.hpp"
#include "lonsim/tomography.hpp"

namespace lonsim::io {

/// Object keys keep insertion order so identical inputs serialize to
/// identical bytes.
using Json = nlohmann::ordered_json;

/// Rounds to `digits` significant decimal digits (0 and non-finite values
/// pass through).
double round_sig(double value, int digits = 12);

/// Complex matrices serialize as row-major nested arrays of [re, im]
/// pairs; vectors as one such row.
Json to_json(const CMatrix& m);
Json to_json(const CVector& v);
CMatrix cmatrix_from_json(const Json& j);
CVector cvector_from_json(const Json& j);

/// Occupation lists serialize as plain integer arrays.
Json to_json(const FockState& state);
FockState fock_from_json(const Json& j);

/// Invariants serialize with 12 significant digits.
Json to_json(const InvariantSet& inv);
InvariantSet invariants_from_json(const Json& j);

/// A density state serializes as its matrix plus frame shape; coefficients
/// are recomputed on load against a compatible frame.
Json to_json(const DensityState& state);
DensityState density_from_json(const Json& j, FramePtr frame,
                               StateValidation mode = StateValidation::strict);

Json to_json(const SettingCounts& counts);
SettingCounts setting_counts_from_json(const Json& j);
Json to_json(const CountRecord& record);
CountRecord count_record_from_json(const Json& j);

/// Frame export: element list plus the partition sizes (scalar, traceless
/// tangent, perpendicular) needed to rebuild the subspace split.
Json to_json(const HermitianFrame& frame);
FramePtr frame_from_json(const Json& j);

/// Cache file name for a frame: a content hash of (photons, modes,
/// ordering version).
std::string frame_cache_name(int photons, int modes);

void save_frame(const HermitianFrame& frame, const std::string& path);
FramePtr load_frame(const std::string& path);

/// Serializes with a stable 2-space indent and trailing newline.
std::string dump(const Json& j);

/**
 * Parses a JSON document, rethrowing parse failures as std::runtime_error
 * with the source label and the position reported by the parser.
 */
Json parse(const std::string& text, const std::string& source_label);
Json parse_file(const std::string& path);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace lonsim::io
