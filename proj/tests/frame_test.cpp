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
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <vector>

#include "lonsim/frame.hpp"
#include "lonsim/jordan_schwinger.hpp"
#include "lonsim/json_io.hpp"
#include "test_helpers.hpp"

using namespace lonsim;

namespace {

// Reference two-photon two-mode frame, written out element by element.
std::vector<CMatrix> reference_frame_22() {
  const double r2 = std::sqrt(2.0);
  const double r3 = std::sqrt(3.0);
  const double r6 = std::sqrt(6.0);
  const Complex i(0.0, 1.0);
  std::vector<CMatrix> h(9, CMatrix::Zero(3, 3));
  h[0] = CMatrix::Identity(3, 3) / r3;
  h[1] << 1 / r2, 0, 0, 0, 0, 0, 0, 0, -1 / r2;
  h[2] << 0, .5, 0, .5, 0, .5, 0, .5, 0;
  h[3] << 0, -.5 * i, 0, .5 * i, 0, -.5 * i, 0, .5 * i, 0;
  h[4] << 1 / r6, 0, 0, 0, -2 / r6, 0, 0, 0, 1 / r6;
  h[5] << 0, .5, 0, .5, 0, -.5, 0, -.5, 0;
  h[6] << 0, -.5 * i, 0, .5 * i, 0, .5 * i, 0, -.5 * i, 0;
  h[7] << 0, 0, -i / r2, 0, 0, 0, i / r2, 0, 0;
  h[8] << 0, 0, 1 / r2, 0, 0, 0, 1 / r2, 0, 0;
  return h;
}

// Projector onto the span of a set of matrices, in vectorized form.
CMatrix span_projector(std::span<const CMatrix> mats) {
  const auto dim = mats[0].size();
  CMatrix p = CMatrix::Zero(dim, dim);
  for (const CMatrix& m : mats) {
    CVector v(dim);
    int idx = 0;
    for (int c = 0; c < m.cols(); ++c) {
      for (int r = 0; r < m.rows(); ++r) v(idx++) = m(r, c);
    }
    p += v * v.adjoint();
  }
  return p;
}

}  // namespace

TEST_CASE("two-photon two-mode frame reproduces the reference matrices") {
  const FramePtr frame = test::shared_frame(2, 2);
  const auto ref = reference_frame_22();
  REQUIRE(frame->size() == 9);
  for (int idx = 0; idx <= 3; ++idx) {
    CAPTURE(idx);
    CHECK(test::matrix_distance(frame->element(idx),
                                ref[static_cast<std::size_t>(idx)]) < 1e-10);
  }
  // The completion is only fixed up to rotation, so compare spans.
  const CMatrix built = span_projector(frame->perpendicular());
  const CMatrix printed = span_projector(
      std::span<const CMatrix>(ref.data() + 4, 5));
  CHECK(test::matrix_distance(built, printed) < 1e-10);
}

TEST_CASE("frame partition sizes follow the sector dimensions") {
  for (auto [n, m] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    const FramePtr frame = test::shared_frame(n, m);
    const int dim = frame->dim();
    CHECK(frame->size() == dim * dim);
    CHECK(frame->tangent_size() == m * m);
    CHECK(static_cast<int>(frame->traceless_tangent().size()) == m * m - 1);
    CHECK(static_cast<int>(frame->perpendicular().size()) ==
          dim * dim - m * m);
  }
}

TEST_CASE("frame elements form an orthonormal Hermitian basis") {
  for (auto [n, m] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    const FramePtr frame = test::shared_frame(n, m);
    for (int i = 0; i < frame->size(); ++i) {
      CHECK(hermiticity_error(frame->element(i)) < 1e-12);
      if (i > 0) CHECK(std::abs(frame->element(i).trace()) < 1e-12);
      for (int j = i; j < frame->size(); ++j) {
        const double expected = (i == j) ? 1.0 : 0.0;
        CHECK(std::abs(hs_inner(frame->element(i), frame->element(j)) -
                       expected) < 1e-10);
      }
    }
  }
}

TEST_CASE("tangent elements are scaled generator images") {
  const FramePtr frame = test::shared_frame(2, 3);
  const FockBasis& basis = frame->basis();
  const ModeHermitianBasis ggm = ggm_basis(3);
  const int dim = frame->dim();
  CHECK(test::matrix_distance(
            frame->element(0),
            CMatrix::Identity(dim, dim) / std::sqrt(double(dim))) < 1e-12);
  const double scale = std::sqrt(double(binomial(3 + 2, 3 + 1)));
  for (int i = 1; i < ggm.size(); ++i) {
    CHECK(test::matrix_distance(frame->element(i),
                                (js_map(ggm.element(i), basis) / scale).eval())
          < 1e-12);
  }
}

TEST_CASE("raw observables are the unscaled generator images") {
  const FramePtr frame = test::shared_frame(2, 2);
  const auto& obs = frame->observables();
  REQUIRE(static_cast<int>(obs.size()) == 4);
  const FockBasis& basis = frame->basis();
  const ModeHermitianBasis ggm = ggm_basis(2);
  for (int i = 0; i < 4; ++i) {
    CHECK(test::matrix_distance(obs[static_cast<std::size_t>(i)],
                                js_map(ggm.element(i), basis)) < 1e-12);
  }
}

TEST_CASE("frame cache round-trips through disk") {
  namespace fs = std::filesystem;
  const fs::path dir =
      fs::temp_directory_path() / "lonsim_frame_cache_test";
  fs::remove_all(dir);
  fs::create_directories(dir);

  const FramePtr first = load_or_build_frame(2, 2, dir.string());
  const fs::path cached = dir / io::frame_cache_name(2, 2);
  REQUIRE(fs::exists(cached));

  const FramePtr second = load_or_build_frame(2, 2, dir.string());
  REQUIRE(second->size() == first->size());
  for (int i = 0; i < first->size(); ++i) {
    CHECK(test::matrix_distance(first->element(i), second->element(i)) <
          1e-14);
  }

  // A corrupt cache entry is ignored and rebuilt in place.
  {
    std::ofstream out(cached);
    out << "{ not json";
  }
  const FramePtr third = load_or_build_frame(2, 2, dir.string());
  CHECK(third->size() == first->size());
  fs::remove_all(dir);
}

TEST_CASE("frame construction respects the dimension cap") {
  CHECK_THROWS_AS(build_frame(10, 10, 100), std::length_error);
}

TEST_CASE("frame cache keys identify the sector and ordering") {
  const FramePtr frame = test::shared_frame(2, 2);
  const std::string key = frame->cache_key();
  CHECK(key.find("n2") != std::string::npos);
  CHECK(key.find("m2") != std::string::npos);
  CHECK(io::frame_cache_name(2, 2) == key + ".json");
}
