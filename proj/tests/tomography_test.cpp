/**
 * This code is part of lonsim.
 *
 * (C) Copyright the lonsim developers 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/SVD>

#include "lonsim/hom_preparation.hpp"
#include "lonsim/random.hpp"
#include "lonsim/tomography.hpp"
#include "test_helpers.hpp"

using namespace lonsim;

namespace {

constexpr double kDeg = M_PI / 180.0;

std::vector<std::array<double, 3>> exact_probability_table(
    const DensityState& state, const std::vector<MeasurementSetting>& settings) {
  std::vector<std::array<double, 3>> rows;
  rows.reserve(settings.size());
  for (const MeasurementSetting& setting : settings) {
    rows.push_back(exact_probabilities(state, setting));
  }
  return rows;
}

}  // namespace

TEST_CASE("the six settings use the fixed plate schedule") {
  const FramePtr frame = test::shared_frame(2, 2);
  const auto settings = tomography_settings(frame);
  REQUIRE(settings.size() == 6);
  const double expected[6][2] = {{0, 0},     {0, 11.25}, {0, 22.5},
                                 {22.5, 0},  {22.5, 22.5}, {45, 22.5}};
  for (std::size_t i = 0; i < settings.size(); ++i) {
    CHECK(settings[i].qwp.angle ==
          doctest::Approx(expected[i][0] * kDeg).epsilon(1e-12));
    CHECK(settings[i].hwp.angle ==
          doctest::Approx(expected[i][1] * kDeg).epsilon(1e-12));
    CHECK(settings[i].qwp.kind == WavePlateKind::quarter);
    CHECK(settings[i].hwp.kind == WavePlateKind::half);
  }
}

TEST_CASE("every setting is a complete positive measurement") {
  const FramePtr frame = test::shared_frame(2, 2);
  for (const MeasurementSetting& setting : tomography_settings(frame)) {
    CMatrix sum = CMatrix::Zero(3, 3);
    for (const CMatrix& effect : setting.povm) {
      CHECK(hermiticity_error(effect) < 1e-12);
      Eigen::SelfAdjointEigenSolver<CMatrix> eig(effect);
      CHECK(eig.eigenvalues().minCoeff() > -1e-12);
      sum += effect;
    }
    CHECK(test::matrix_distance(sum, CMatrix::Identity(3, 3)) < 1e-12);
  }
}

TEST_CASE("the stacked effects span the full state space") {
  const FramePtr frame = test::shared_frame(2, 2);
  const auto settings = tomography_settings(frame);
  RMatrix design(18, 9);
  int row = 0;
  for (const MeasurementSetting& setting : settings) {
    for (const CMatrix& effect : setting.povm) {
      for (int j = 0; j < 9; ++j) {
        design(row, j) = hs_inner(frame->element(j), effect).real();
      }
      ++row;
    }
  }
  Eigen::JacobiSVD<RMatrix> svd(design);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > 1e-8) ++rank;
  }
  CHECK(rank == 9);
  CHECK(svd.singularValues()(8) > 0.4);
}

TEST_CASE("exact setting probabilities are a normalized distribution") {
  auto rng = test::seeded_rng(1001);
  const FramePtr frame = test::shared_frame(2, 2);
  const DensityState state = density_vector(random_density(3, rng), frame);
  for (const MeasurementSetting& setting : tomography_settings(frame)) {
    const auto p = exact_probabilities(state, setting);
    CHECK(p[0] + p[1] + p[2] == doctest::Approx(1.0).epsilon(1e-12));
    for (double v : p) CHECK(v > -1e-12);
  }
}

TEST_CASE("exact probabilities reconstruct states to numerical precision") {
  auto rng = test::seeded_rng(1002);
  const FramePtr frame = test::shared_frame(2, 2);
  const auto settings = tomography_settings(frame);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityState state = density_vector(random_density(3, rng), frame);
    const TomographyResult result =
        reconstruct_ls(settings, exact_probability_table(state, settings),
                       frame);
    CHECK(fidelity(result.state.rho(), state.rho()) > 1.0 - 1e-6);
    CHECK(result.residual < 1e-8);
  }
}

TEST_CASE("reconstruction needs enough settings to fix every direction") {
  const FramePtr frame = test::shared_frame(2, 2);
  const auto settings = tomography_settings(frame);
  const DensityState state = maximally_mixed(frame);
  const std::vector<MeasurementSetting> truncated(settings.begin(),
                                                  settings.begin() + 2);
  CHECK_THROWS_AS(
      reconstruct_ls(truncated, exact_probability_table(state, truncated),
                     frame),
      std::runtime_error);
}

TEST_CASE("simulated ideal counts land every shot in one class") {
  auto rng = test::seeded_rng(1003);
  const FramePtr frame = test::shared_frame(2, 2);
  const DensityState state = prepare_state_hom(22.5 * kDeg, frame).state;
  const auto settings = tomography_settings(frame);
  const CountRecord record =
      simulate_counts(state, settings, 5000, DetectorModel::ideal, rng);
  REQUIRE(record.settings.size() == 6);
  CHECK(record.shots_per_setting == 5000);
  for (const SettingCounts& counts : record.settings) {
    CHECK(counts.class_counts[0] + counts.class_counts[1] +
              counts.class_counts[2] == 5000);
    CHECK(counts.recorded == 5000);
    CHECK(counts.shots == 5000);
  }
}

TEST_CASE("splitting losses discard half of each bunched class on average") {
  auto rng = test::seeded_rng(1004);
  const FramePtr frame = test::shared_frame(2, 2);
  // The bunched state sends every shot into the first or third class.
  CVector amp = CVector::Zero(3);
  amp(0) = 1.0;
  const DensityState state = pure_state(amp, frame);
  const auto settings = tomography_settings(frame);
  const CountRecord record =
      simulate_counts(state, settings, 40000, DetectorModel::splitting, rng);
  const SettingCounts& first = record.settings.front();
  CHECK(first.shots == 40000);
  const double kept = double(first.recorded) / double(first.shots);
  CHECK(kept == doctest::Approx(0.5).epsilon(0.05));
  long pair_total = 0;
  for (long c : first.pair_counts) pair_total += c;
  CHECK(pair_total == first.recorded);
}

TEST_CASE("splitting correction rescales bunched classes back") {
  SettingCounts counts;
  counts.class_counts = {100, 400, 50};
  counts.recorded = 550;
  counts.shots = 1000;

  const auto ideal = corrected_probabilities(counts, DetectorModel::ideal);
  CHECK(ideal[0] == doctest::Approx(100.0 / 550.0).epsilon(1e-12));

  const auto corrected =
      corrected_probabilities(counts, DetectorModel::splitting);
  // Bunched classes are doubled before renormalizing: 200 / 700, 400 / 700.
  CHECK(corrected[0] == doctest::Approx(200.0 / 700.0).epsilon(1e-12));
  CHECK(corrected[1] == doctest::Approx(400.0 / 700.0).epsilon(1e-12));
  CHECK(corrected[2] == doctest::Approx(100.0 / 700.0).epsilon(1e-12));
  CHECK(corrected[0] + corrected[1] + corrected[2] ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("finite-shot reconstruction reaches high fidelity") {
  auto rng = test::seeded_rng(1005);
  const FramePtr frame = test::shared_frame(2, 2);
  const auto settings = tomography_settings(frame);
  const DensityState state = prepare_state_hom(22.5 * kDeg, frame).state;
  for (DetectorModel model :
       {DetectorModel::ideal, DetectorModel::splitting}) {
    const CountRecord record =
        simulate_counts(state, settings, 200000, model, rng);
    const TomographyResult result =
        reconstruct_from_counts(settings, record, frame);
    CAPTURE(static_cast<int>(model));
    CHECK(fidelity(result.state.rho(), state.rho()) > 0.995);
  }
}

TEST_CASE("constrained refinement never increases the data cost") {
  auto rng = test::seeded_rng(1006);
  const FramePtr frame = test::shared_frame(2, 2);
  const auto settings = tomography_settings(frame);
  const DensityState state = prepare_state_hom(30.0 * kDeg, frame).state;
  const CountRecord record =
      simulate_counts(state, settings, 2000, DetectorModel::ideal, rng);
  const TomographyResult linear =
      reconstruct_from_counts(settings, record, frame,
                              ReconstructionMethod::linear);
  const TomographyResult constrained =
      reconstruct_from_counts(settings, record, frame,
                              ReconstructionMethod::constrained);
  CHECK(constrained.cost <= linear.cost + 1e-12);
  CHECK(constrained.state.purity() <= 1.0 + 1e-9);
}

TEST_CASE("count records must line up with the settings") {
  auto rng = test::seeded_rng(1007);
  const FramePtr frame = test::shared_frame(2, 2);
  const auto settings = tomography_settings(frame);
  const DensityState state = maximally_mixed(frame);
  CountRecord record =
      simulate_counts(state, settings, 100, DetectorModel::ideal, rng);
  record.settings.pop_back();
  CHECK_THROWS_AS(reconstruct_from_counts(settings, record, frame),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      simulate_counts(state, settings, 0, DetectorModel::ideal, rng),
      std::invalid_argument);
}
