/**
 * This code is part of lonsim.
 *
 * (C) Copyright the lonsim developers 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "lonsim/frame.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <stdexcept>

#include "lonsim/jordan_schwinger.hpp"
#include "lonsim/json_io.hpp"
#include "lonsim/random.hpp"
#include "lonsim/version.hpp"

namespace lonsim {

namespace {

constexpr double kResidualThreshold = 1e-8;

// Full orthonormality validation costs O(size^2 dim^2); above this element
// count the constructor samples pairs instead.
constexpr int kFullCheckLimit = 1100;

double norm_hs(const CMatrix& a) { return std::sqrt(std::abs(hs_inner(a, a))); }

}  // namespace

std::vector<CMatrix> tangent_basis(const FockBasis& basis) {
  const int m = basis.modes();
  const double scale =
      std::sqrt(double(binomial(m + basis.photons(), m + 1)));
  const ModeHermitianBasis mode_basis = ggm_basis(m);

  std::vector<CMatrix> out;
  out.reserve(static_cast<std::size_t>(m) * m);
  out.push_back(CMatrix::Identity(basis.dim(), basis.dim()) /
                std::sqrt(double(basis.dim())));
  for (int i = 1; i < mode_basis.size(); ++i) {
    out.push_back(js_map(mode_basis.element(i), basis) / scale);
  }
  return out;
}

std::vector<CMatrix> raw_observables(const FockBasis& basis) {
  const ModeHermitianBasis mode_basis = ggm_basis(basis.modes());
  std::vector<CMatrix> out;
  out.reserve(static_cast<std::size_t>(mode_basis.size()));
  for (int i = 0; i < mode_basis.size(); ++i) {
    out.push_back(js_map(mode_basis.element(i), basis));
  }
  return out;
}

std::vector<CMatrix> perpendicular_basis(const FockBasis& basis,
                                         const std::vector<CMatrix>& tangent) {
  const int dim = basis.dim();
  const ModeHermitianBasis candidates = ggm_basis(dim);

  std::vector<CMatrix> all = tangent;
  std::vector<CMatrix> perp;
  const std::size_t target = static_cast<std::size_t>(dim) * dim;
  perp.reserve(target - tangent.size());
  for (const CMatrix& candidate : candidates.elements()) {
    CMatrix v = candidate;
    // Two-pass modified Gram-Schmidt keeps the residual orthogonal to
    // working precision even when the candidate is nearly in the span.
    for (int pass = 0; pass < 2; ++pass) {
      for (const CMatrix& e : all) {
        v -= hs_inner(e, v) * e;
      }
    }
    const double residual = norm_hs(v);
    if (residual > kResidualThreshold) {
      v /= residual;
      all.push_back(v);
      perp.push_back(std::move(v));
    }
    if (all.size() == target) break;
  }
  if (all.size() != target) {
    throw std::runtime_error(
        "perpendicular_basis: completion produced wrong element count");
  }
  return perp;
}

HermitianFrame::HermitianFrame(std::shared_ptr<const FockBasis> basis,
                               std::vector<CMatrix> elements,
                               std::vector<CMatrix> raw_observables)
    : basis_(std::move(basis)),
      elements_(std::move(elements)),
      raw_observables_(std::move(raw_observables)) {
  if (!basis_) throw std::invalid_argument("HermitianFrame: basis must be set");
  const int dim = basis_->dim();
  const int m = basis_->modes();
  const int size = static_cast<int>(elements_.size());
  if (size != dim * dim) {
    throw std::invalid_argument("HermitianFrame: need dim^2 elements");
  }
  if (static_cast<int>(raw_observables_.size()) != m * m) {
    throw std::invalid_argument("HermitianFrame: need m^2 raw observables");
  }

  for (const CMatrix& e : elements_) {
    if (e.rows() != dim || e.cols() != dim) {
      throw std::invalid_argument("HermitianFrame: element size mismatch");
    }
    if (hermiticity_error(e) > kMatrixTol) {
      throw std::invalid_argument("HermitianFrame: element not Hermitian");
    }
  }
  for (int i = 1; i < size; ++i) {
    if (std::abs(elements_[static_cast<std::size_t>(i)].trace()) > kMatrixTol) {
      throw std::invalid_argument(
          "HermitianFrame: traceless part has nonzero trace");
    }
  }

  auto pair_ok = [&](int i, int j) {
    const Complex g = hs_inner(elements_[static_cast<std::size_t>(i)],
                               elements_[static_cast<std::size_t>(j)]);
    const double want = i == j ? 1.0 : 0.0;
    return std::abs(g - want) <= 10 * kMatrixTol;
  };
  if (size <= kFullCheckLimit) {
    for (int i = 0; i < size; ++i) {
      for (int j = i; j < size; ++j) {
        if (!pair_ok(i, j)) {
          throw std::invalid_argument("HermitianFrame: not orthonormal");
        }
      }
    }
  } else {
    std::mt19937_64 rng(fnv1a64(cache_key()));
    std::uniform_int_distribution<int> pick(0, size - 1);
    for (int t = 0; t < 1000; ++t) {
      const int i = pick(rng);
      const int j = pick(rng);
      if (!pair_ok(i, j)) {
        throw std::invalid_argument("HermitianFrame: not orthonormal");
      }
    }
  }
}

std::span<const CMatrix> HermitianFrame::traceless_tangent() const {
  return std::span<const CMatrix>(elements_).subspan(
      1, static_cast<std::size_t>(tangent_size() - 1));
}

std::span<const CMatrix> HermitianFrame::perpendicular() const {
  return std::span<const CMatrix>(elements_).subspan(
      static_cast<std::size_t>(tangent_size()));
}

std::string HermitianFrame::cache_key() const {
  std::ostringstream tag;
  tag << "frame-n" << photons() << "-m" << modes() << "-ord"
      << kOrderingVersion;
  std::ostringstream out;
  out << tag.str() << '-' << std::hex << fnv1a64(tag.str());
  return out.str();
}

HermitianFrame build_frame(int photons, int modes, int max_dim) {
  auto basis = std::make_shared<const FockBasis>(
      enumerate_fock_basis(photons, modes, max_dim));
  std::vector<CMatrix> tangent = tangent_basis(*basis);
  std::vector<CMatrix> perp = perpendicular_basis(*basis, tangent);
  std::vector<CMatrix> elements = std::move(tangent);
  elements.insert(elements.end(), std::make_move_iterator(perp.begin()),
                  std::make_move_iterator(perp.end()));
  return HermitianFrame(basis, std::move(elements), raw_observables(*basis));
}

FramePtr build_frame_shared(int photons, int modes, int max_dim) {
  return std::make_shared<const HermitianFrame>(
      build_frame(photons, modes, max_dim));
}

FramePtr load_or_build_frame(int photons, int modes,
                             const std::string& cache_dir, int max_dim) {
  std::string dir = cache_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("LONSIM_FRAME_CACHE")) dir = env;
  }
  if (dir.empty()) return build_frame_shared(photons, modes, max_dim);

  const std::filesystem::path path =
      std::filesystem::path(dir) / (io::frame_cache_name(photons, modes));
  if (std::filesystem::exists(path)) {
    try {
      FramePtr cached = io::load_frame(path.string());
      if (cached->photons() == photons && cached->modes() == modes) {
        return cached;
      }
    } catch (const std::exception&) {
      // Fall through and rebuild; the stale file is replaced below.
    }
  }
  FramePtr fresh = build_frame_shared(photons, modes, max_dim);
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  if (!ec) {
    try {
      io::save_frame(*fresh, path.string());
    } catch (const std::exception&) {
      // Caching is best effort; the caller still gets a valid frame.
    }
  }
  return fresh;
}

}  // namespace lonsim
