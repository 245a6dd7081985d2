/**
 * This code is part of lonsim.
 *
 * (C) Copyright the lonsim developers 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "lonsim/tomography.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "lonsim/levmar.hpp"
#include "lonsim/random.hpp"
#include "lonsim/scattering.hpp"

namespace lonsim {

namespace {

void require_pair_sector(const HermitianFrame& frame, const char* where) {
  if (frame.photons() != 2 || frame.modes() != 2) {
    throw std::invalid_argument(std::string(where) +
                                ": frame must be the two-photon pair sector");
  }
}

CMatrix coeffs_to_matrix(const RVector& coeffs, const HermitianFrame& frame) {
  CMatrix rho = CMatrix::Zero(frame.dim(), frame.dim());
  for (int i = 0; i < frame.size(); ++i) {
    rho += coeffs(i) * frame.element(i);
  }
  return rho;
}

/// Projects a Hermitian matrix onto the density cone: eigenvalues clipped
/// to zero and the trace renormalized.
CMatrix project_to_density(const CMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(0.5 * (rho + rho.adjoint()));
  RVector vals = eig.eigenvalues().cwiseMax(0.0);
  const double total = vals.sum();
  if (total <= 0.0) {
    const int dim = static_cast<int>(rho.rows());
    return CMatrix::Identity(dim, dim) / double(dim);
  }
  vals /= total;
  return eig.eigenvectors() * vals.asDiagonal() * eig.eigenvectors().adjoint();
}

/// Lower-triangular factor parameters -> density matrix L L^dag / tr.
CMatrix cholesky_params_to_density(const RVector& x, int dim) {
  CMatrix l = CMatrix::Zero(dim, dim);
  int pos = 0;
  for (int i = 0; i < dim; ++i) {
    l(i, i) = x(pos++);
  }
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < i; ++j) {
      const double re = x(pos++);
      const double im = x(pos++);
      l(i, j) = Complex(re, im);
    }
  }
  CMatrix rho = l * l.adjoint();
  const double tr = rho.trace().real();
  if (tr <= 0.0) {
    return CMatrix::Identity(dim, dim) / double(dim);
  }
  return rho / tr;
}

RVector density_to_cholesky_params(const CMatrix& rho, int dim) {
  // Eigenvalue floor keeps the factor full rank so the parameterization
  // can move every matrix element during refinement.
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(rho);
  RVector vals = eig.eigenvalues().cwiseMax(1e-8);
  vals /= vals.sum();
  const CMatrix regular = eig.eigenvectors() * vals.asDiagonal() *
                          eig.eigenvectors().adjoint();
  const Eigen::LLT<CMatrix> llt(regular);
  const CMatrix l = llt.matrixL();
  RVector x(dim * dim);
  int pos = 0;
  for (int i = 0; i < dim; ++i) {
    x(pos++) = l(i, i).real();
  }
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < i; ++j) {
      x(pos++) = l(i, j).real();
      x(pos++) = l(i, j).imag();
    }
  }
  return x;
}

}  // namespace

std::vector<MeasurementSetting> tomography_settings(FramePtr frame) {
  if (!frame) {
    throw std::invalid_argument("tomography_settings: frame must be set");
  }
  require_pair_sector(*frame, "tomography_settings");
  const double rad = std::numbers::pi / 180.0;
  const double plate_angles[][2] = {{0.0, 0.0},   {0.0, 11.25}, {0.0, 22.5},
                                    {22.5, 0.0},  {22.5, 22.5}, {45.0, 22.5}};
  const int dim = frame->dim();

  std::vector<MeasurementSetting> settings;
  settings.reserve(6);
  for (const auto& pair : plate_angles) {
    MeasurementSetting setting;
    setting.qwp = {WavePlateKind::quarter, pair[0] * rad};
    setting.hwp = {WavePlateKind::half, pair[1] * rad};
    const Eigen::Matrix2cd mode_unitary =
        jones(setting.hwp) * jones(setting.qwp);
    const MultiPhotonUnitary lifted =
        photonic_homomorphism(CMatrix(mode_unitary), frame->photons());
    setting.unitary = lifted.matrix();
    for (int outcome = 0; outcome < 3; ++outcome) {
      CMatrix projector = CMatrix::Zero(dim, dim);
      projector(outcome, outcome) = 1.0;
      setting.povm[static_cast<std::size_t>(outcome)] =
          setting.unitary.adjoint() * projector * setting.unitary;
    }
    settings.push_back(std::move(setting));
  }
  return settings;
}

std::array<double, 3> exact_probabilities(const DensityState& state,
                                          const MeasurementSetting& setting) {
  std::array<double, 3> probs{};
  for (int outcome = 0; outcome < 3; ++outcome) {
    const double p =
        (state.rho() * setting.povm[static_cast<std::size_t>(outcome)])
            .trace()
            .real();
    probs[static_cast<std::size_t>(outcome)] = std::max(p, 0.0);
  }
  return probs;
}

CountRecord simulate_counts(const DensityState& state,
                            const std::vector<MeasurementSetting>& settings,
                            std::uint64_t shots_per_setting,
                            DetectorModel model, std::mt19937_64& rng) {
  if (shots_per_setting == 0) {
    throw std::invalid_argument("simulate_counts: shots_per_setting is zero");
  }
  require_pair_sector(state.frame(), "simulate_counts");

  CountRecord record;
  record.model = model;
  record.shots_per_setting = shots_per_setting;
  record.settings.reserve(settings.size());

  for (const MeasurementSetting& setting : settings) {
    const std::array<double, 3> probs = exact_probabilities(state, setting);
    RVector p(3);
    p << probs[0], probs[1], probs[2];
    const std::vector<long> classes =
        multinomial(static_cast<long>(shots_per_setting), p, rng);

    SettingCounts counts;
    counts.shots = static_cast<long>(shots_per_setting);
    if (model == DetectorModel::ideal) {
      counts.class_counts = {classes[0], classes[1], classes[2]};
      counts.recorded = counts.shots;
    } else {
      // Bunched pairs reach the two detectors of their path with
      // probability 1/2 and are dropped otherwise; split pairs always
      // produce one click in each path.
      std::binomial_distribution<long> survive_h(classes[0], 0.5);
      std::binomial_distribution<long> survive_v(classes[2], 0.5);
      const long kept_h = survive_h(rng);
      const long kept_v = survive_v(rng);
      RVector quarter(4);
      quarter << 0.25, 0.25, 0.25, 0.25;
      const std::vector<long> mixed = multinomial(classes[1], quarter, rng);

      counts.class_counts = {kept_h, classes[1], kept_v};
      // Pair order {12, 13, 14, 23, 24, 34}; 1,2 watch H and 3,4 watch V.
      counts.pair_counts = {kept_h,   mixed[0], mixed[1],
                            mixed[2], mixed[3], kept_v};
      counts.recorded = kept_h + classes[1] + kept_v;
    }
    record.settings.push_back(counts);
  }
  return record;
}

std::array<double, 3> corrected_probabilities(const SettingCounts& counts,
                                              DetectorModel model) {
  std::array<double, 3> out{};
  double weighted[3];
  if (model == DetectorModel::ideal) {
    weighted[0] = double(counts.class_counts[0]);
    weighted[1] = double(counts.class_counts[1]);
    weighted[2] = double(counts.class_counts[2]);
  } else {
    weighted[0] = 2.0 * double(counts.class_counts[0]);
    weighted[1] = double(counts.class_counts[1]);
    weighted[2] = 2.0 * double(counts.class_counts[2]);
  }
  const double total = weighted[0] + weighted[1] + weighted[2];
  if (total <= 0.0) {
    throw std::invalid_argument(
        "corrected_probabilities: no recorded events");
  }
  for (int i = 0; i < 3; ++i) out[static_cast<std::size_t>(i)] = weighted[i] / total;
  return out;
}

TomographyResult reconstruct_ls(
    const std::vector<MeasurementSetting>& settings,
    const std::vector<std::array<double, 3>>& probabilities, FramePtr frame,
    ReconstructionMethod method) {
  if (!frame) {
    throw std::invalid_argument("reconstruct_ls: frame must be set");
  }
  require_pair_sector(*frame, "reconstruct_ls");
  if (settings.empty() || settings.size() != probabilities.size()) {
    throw std::invalid_argument(
        "reconstruct_ls: need one probability triple per setting");
  }

  const int dim = frame->dim();
  const int unknowns = frame->size() - 1;
  const int rows = static_cast<int>(settings.size()) * 3;
  RMatrix design(rows, unknowns);
  RVector target(rows);
  int row = 0;
  for (std::size_t s = 0; s < settings.size(); ++s) {
    for (int outcome = 0; outcome < 3; ++outcome) {
      const CMatrix& effect =
          settings[s].povm[static_cast<std::size_t>(outcome)];
      for (int j = 1; j < frame->size(); ++j) {
        design(row, j - 1) = hs_inner(frame->element(j), effect).real();
      }
      target(row) = probabilities[s][static_cast<std::size_t>(outcome)] -
                    effect.trace().real() / double(dim);
      ++row;
    }
  }

  Eigen::JacobiSVD<RMatrix> svd(design,
                                Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(1e-8);
  if (svd.rank() < unknowns) {
    throw std::runtime_error(
        "reconstruct_ls: settings do not determine the state (design rank " +
        std::to_string(svd.rank()) + " of " + std::to_string(unknowns) + ")");
  }
  const RVector solution = svd.solve(target);

  RVector coeffs(frame->size());
  coeffs(0) = 1.0 / std::sqrt(double(dim));
  coeffs.tail(unknowns) = solution;
  CMatrix rho = project_to_density(coeffs_to_matrix(coeffs, *frame));

  if (method == ReconstructionMethod::constrained) {
    const auto residual_fn = [&](const RVector& x) {
      const CMatrix candidate = cholesky_params_to_density(x, dim);
      RVector r(rows);
      int k = 0;
      for (std::size_t s = 0; s < settings.size(); ++s) {
        for (int outcome = 0; outcome < 3; ++outcome) {
          const double p =
              (candidate * settings[s].povm[static_cast<std::size_t>(outcome)])
                  .trace()
                  .real();
          r(k++) = p - probabilities[s][static_cast<std::size_t>(outcome)];
        }
      }
      return r;
    };
    const RVector x0 = density_to_cholesky_params(rho, dim);
    const double cost0 = residual_fn(x0).squaredNorm();
    const LevMarResult fit = levenberg_marquardt(residual_fn, x0);
    if (fit.converged && fit.cost < cost0) {
      rho = cholesky_params_to_density(fit.x, dim);
    }
  }

  TomographyResult result{
      density_vector(rho, frame, StateValidation::lenient), 0.0, 0.0};
  double cost = 0.0;
  for (std::size_t s = 0; s < settings.size(); ++s) {
    const std::array<double, 3> fitted =
        exact_probabilities(result.state, settings[s]);
    for (int outcome = 0; outcome < 3; ++outcome) {
      const double diff = fitted[static_cast<std::size_t>(outcome)] -
                          probabilities[s][static_cast<std::size_t>(outcome)];
      cost += diff * diff;
    }
  }
  result.cost = cost;
  result.residual = std::sqrt(cost / rows);
  return result;
}

TomographyResult reconstruct_from_counts(
    const std::vector<MeasurementSetting>& settings, const CountRecord& record,
    FramePtr frame, ReconstructionMethod method) {
  if (settings.size() != record.settings.size()) {
    throw std::invalid_argument(
        "reconstruct_from_counts: counts do not match settings");
  }
  std::vector<std::array<double, 3>> probabilities;
  probabilities.reserve(record.settings.size());
  for (const SettingCounts& counts : record.settings) {
    probabilities.push_back(corrected_probabilities(counts, record.model));
  }
  return reconstruct_ls(settings, probabilities, std::move(frame), method);
}

}  // namespace lonsim
