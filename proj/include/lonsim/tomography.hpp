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

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "lonsim/density.hpp"
#include "lonsim/waveplates.hpp"

namespace lonsim {

/**
 * One pseudo-photon-number-resolving measurement setting for two photons in
 * two polarization modes: a quarter- and a half-wave plate rotate the state,
 * then a beam displacer splits H from V and each path is monitored by a
 * balanced pair of threshold detectors. Click pairs resolve the photon
 * number per polarization up to the bunched-path splitting statistics.
 */
struct MeasurementSetting {
  WavePlate qwp;
  WavePlate hwp;
  /// Two-photon unitary lifted from the plate pair, V = phi(H * Q).
  CMatrix unitary;
  /// POVM elements for outcomes |2H,0V>, |1H,1V>, |0H,2V> in that order:
  /// E_i = V^dagger P_i V with P_i the basis projectors.
  std::array<CMatrix, 3> povm;
};

/// The six benchmark plate settings (qwp, hwp) in degrees:
/// (0,0), (0,11.25), (0,22.5), (22.5,0), (22.5,22.5), (45,22.5).
/// frame must be (2, 2).
std::vector<MeasurementSetting> tomography_settings(FramePtr frame);

/// Exact outcome probabilities tr(rho E_i) for one setting.
std::array<double, 3> exact_probabilities(const DensityState& state,
                                          const MeasurementSetting& setting);

/// How click statistics are generated from the outcome classes.
enum class DetectorModel {
  /// Outcome classes observed directly.
  ideal,
  /// Each path feeds two threshold detectors through a balanced splitter:
  /// a bunched pair lands on distinct detectors with probability 1/2 and
  /// is lost to a single-detector coincidence otherwise, while a split
  /// pair always yields one click per path.
  splitting,
};

/// Counts recorded for one setting. class_counts holds the three outcome
/// classes; pair_counts holds detector-pair coincidences in the order
/// {12, 13, 14, 23, 24, 34} with detectors 1,2 on the H path and 3,4 on
/// the V path (populated by the splitting model only).
struct SettingCounts {
  std::array<long, 3> class_counts{};
  std::array<long, 6> pair_counts{};
  long shots = 0;
  long recorded = 0;
};

struct CountRecord {
  std::vector<SettingCounts> settings;
  DetectorModel model = DetectorModel::ideal;
  std::uint64_t shots_per_setting = 0;
};

/// Samples finite-shot counts for every setting.
CountRecord simulate_counts(const DensityState& state,
                            const std::vector<MeasurementSetting>& settings,
                            std::uint64_t shots_per_setting,
                            DetectorModel model, std::mt19937_64& rng);

/// Outcome-class probability estimates for one setting. For the splitting
/// model the bunched classes are scaled by 2 to undo the coincidence loss
/// before renormalizing.
std::array<double, 3> corrected_probabilities(const SettingCounts& counts,
                                              DetectorModel model);

enum class ReconstructionMethod {
  /// Least squares over the traceless frame coordinates, then projection
  /// onto the positive cone by eigenvalue clipping.
  linear,
  /// linear followed by a Cholesky-factor refinement of the same cost.
  constrained,
};

struct TomographyResult {
  DensityState state;
  /// Root-mean-square probability residual of the fit.
  double residual = 0.0;
  /// Sum of squared residuals at the returned state.
  double cost = 0.0;
};

/// Reconstructs a density matrix from probability estimates, one triple per
/// setting. probabilities.size() must match settings.size().
TomographyResult reconstruct_ls(
    const std::vector<MeasurementSetting>& settings,
    const std::vector<std::array<double, 3>>& probabilities, FramePtr frame,
    ReconstructionMethod method = ReconstructionMethod::linear);

/// Convenience wrapper: corrected probabilities from counts, then
/// reconstruct_ls.
TomographyResult reconstruct_from_counts(
    const std::vector<MeasurementSetting>& settings, const CountRecord& record,
    FramePtr frame,
    ReconstructionMethod method = ReconstructionMethod::linear);

}  // namespace lonsim
