/**
 * This code is part of lonsim.
 *
 * (C) Copyright the lonsim developers 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "lonsim/hom_preparation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lonsim/scattering.hpp"

namespace lonsim {

namespace {

void require_two_photon_pair(const HermitianFrame& frame, const char* where) {
  if (frame.photons() != 2 || frame.modes() != 2) {
    throw std::invalid_argument(std::string(where) +
                                ": frame must be the two-photon pair sector");
  }
}

}  // namespace

PreparedState prepare_state_hom(double theta, FramePtr frame) {
  if (!frame) {
    throw std::invalid_argument("prepare_state_hom: frame must be set");
  }
  require_two_photon_pair(*frame, "prepare_state_hom");
  if (theta < -1e-12 || theta > std::numbers::pi / 4.0 + 1e-12) {
    throw std::domain_error(
        "prepare_state_hom: theta must lie in [0, pi/4]");
  }
  const double c = std::cos(2.0 * theta);
  const double s = std::sin(2.0 * theta);
  const double norm = std::sqrt(1.0 + c * c);
  CVector amps = CVector::Zero(3);
  amps(0) = std::sqrt(2.0) * c / norm;
  amps(1) = s / norm;
  PreparedState out{theta, std::atan2(s, std::sqrt(2.0) * c),
                    pure_state(amps, std::move(frame))};
  return out;
}

PreparedStateOracle prepare_state_hom_oracle(double theta, FramePtr frame) {
  if (!frame) {
    throw std::invalid_argument("prepare_state_hom_oracle: frame must be set");
  }
  require_two_photon_pair(*frame, "prepare_state_hom_oracle");
  if (theta < -1e-12 || theta > std::numbers::pi / 4.0 + 1e-12) {
    throw std::domain_error(
        "prepare_state_hom_oracle: theta must lie in [0, pi/4]");
  }

  // Four modes ordered (aH, aV, bH, bV); a balanced non-polarizing beam
  // splitter mixes aH with bH and aV with bV.
  const double r = 1.0 / std::sqrt(2.0);
  CMatrix splitter = CMatrix::Zero(4, 4);
  splitter(0, 0) = r;
  splitter(0, 2) = r;
  splitter(1, 1) = r;
  splitter(1, 3) = r;
  splitter(2, 0) = r;
  splitter(2, 2) = -r;
  splitter(3, 1) = r;
  splitter(3, 3) = -r;

  const MultiPhotonUnitary lifted =
      photonic_homomorphism(ScatteringUnitary(splitter), 2);
  const FockBasis& basis4 = lifted.basis();

  CVector input = CVector::Zero(basis4.dim());
  input(basis4.index_of({1, 0, 1, 0})) = std::cos(2.0 * theta);
  input(basis4.index_of({0, 1, 1, 0})) = std::sin(2.0 * theta);
  const CVector output = lifted.matrix() * input;

  const int idx_2h = basis4.index_of({2, 0, 0, 0});
  const int idx_hv = basis4.index_of({1, 1, 0, 0});
  const int idx_2v = basis4.index_of({0, 2, 0, 0});
  CVector kept(3);
  kept << output(idx_2h), output(idx_hv), output(idx_2v);

  const double probability = kept.squaredNorm();
  if (probability <= 0.0) {
    throw std::runtime_error(
        "prepare_state_hom_oracle: post-selection removed all amplitude");
  }
  kept /= std::sqrt(probability);

  // Remove the global phase so the two retained amplitudes are real and
  // non-negative, matching the closed-form parameterization.
  const Complex anchor = std::abs(kept(0)) > 1e-9 ? kept(0) : kept(1);
  kept *= std::conj(anchor) / std::abs(anchor);

  PreparedStateOracle out{
      {theta, std::atan2(kept(1).real(), kept(0).real()),
       pure_state(kept, std::move(frame))},
      probability};
  return out;
}

DensityState state_from_alpha(double alpha, FramePtr frame) {
  if (!frame) {
    throw std::invalid_argument("state_from_alpha: frame must be set");
  }
  require_two_photon_pair(*frame, "state_from_alpha");
  if (alpha < -1e-12 || alpha > std::numbers::pi / 2.0 + 1e-12) {
    throw std::domain_error("state_from_alpha: alpha must lie in [0, pi/2]");
  }
  CVector amps = CVector::Zero(3);
  amps(0) = std::cos(alpha);
  amps(1) = std::sin(alpha);
  return pure_state(amps, std::move(frame));
}

std::array<double, 3> ellipse_coordinates(double alpha) {
  return {(1.0 + std::cos(2.0 * alpha)) / (2.0 * std::sqrt(2.0)),
          std::sin(2.0 * alpha) / 2.0, 0.0};
}

std::vector<PreparationRow> preparation_table(FramePtr frame) {
  if (!frame) {
    throw std::invalid_argument("preparation_table: frame must be set");
  }
  require_two_photon_pair(*frame, "preparation_table");
  const double rad = std::numbers::pi / 180.0;
  const double angles_deg[] = {0.0,  7.5,   11.25, 15.0, 22.5,
                               30.0, 33.75, 37.5,  45.0};
  std::vector<PreparationRow> rows;
  rows.reserve(9);
  for (const double deg : angles_deg) {
    PreparedState prepared = prepare_state_hom(deg * rad, frame);
    InvariantSet inv = invariants(prepared.state);
    rows.push_back(
        {prepared.theta, prepared.alpha, std::move(prepared), inv});
  }
  return rows;
}

const std::array<ReferenceRow, 9>& reference_table() {
  static const std::array<ReferenceRow, 9> table = {{
      {0.0, 0.0, -1.0, -1.0, 0.833, 0.167, 0.5, 4.0},
      {7.5, 10.7, 0.983, 0.186, 0.833, 0.167, 0.500, 3.998},
      {11.25, 16.3, 0.960, 0.281, 0.830, 0.170, 0.497, 3.988},
      {15.0, 22.2, 0.926, 0.378, 0.823, 0.177, 0.490, 3.959},
      {22.5, 35.3, 0.816, 0.577, 0.778, 0.222, 0.445, 3.778},
      {30.0, 50.8, 0.632, 0.775, 0.653, 0.347, 0.320, 3.280},
      {33.75, 59.6, 0.505, 0.863, 0.556, 0.444, 0.223, 2.891},
      {37.5, 69.2, 0.354, 0.935, 0.451, 0.549, 0.118, 2.471},
      {45.0, 90.0, -1.0, -1.0, 0.333, 0.667, 0.0, 2.0},
  }};
  return table;
}

}  // namespace lonsim
