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

#include "lonsim/density.hpp"
#include "lonsim/haar.hpp"
#include "lonsim/random.hpp"
#include "lonsim/transfer_matrix.hpp"
#include "test_helpers.hpp"

using namespace lonsim;

namespace {

// Closed-form two-photon lift of the two-mode scattering matrix, written in
// the decreasing basis order |2,0>, |1,1>, |0,2>.
CMatrix lifted_two_mode(double al, double be, double ga) {
  const double c = std::cos(be / 2), s = std::sin(be / 2);
  const double r2 = std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  CMatrix v(3, 3);
  v(0, 0) = std::exp(i * (al + ga)) * c * c;
  v(0, 1) = r2 * std::exp(i * al) * s * c;
  v(0, 2) = std::exp(i * (al - ga)) * s * s;
  v(1, 0) = -r2 * std::exp(i * ga) * s * c;
  v(1, 1) = c * c - s * s;
  v(1, 2) = r2 * std::exp(-i * ga) * s * c;
  v(2, 0) = std::exp(-i * (al - ga)) * s * s;
  v(2, 1) = -r2 * std::exp(-i * al) * s * c;
  v(2, 2) = std::exp(-i * (al + ga)) * c * c;
  return v;
}

// Closed-form mode-space transfer matrix of the two-mode scattering matrix.
RMatrix mode_transfer_two_mode(double al, double be, double ga) {
  const double ca = std::cos(al), sa = std::sin(al);
  const double cb = std::cos(be), sb = std::sin(be);
  const double cg = std::cos(ga), sg = std::sin(ga);
  RMatrix r(4, 4);
  r << 1, 0, 0, 0,
      0, cb, sb * cg, sb * sg,
      0, -ca * sb, ca * cb * cg - sa * sg, ca * cb * sg + sa * cg,
      0, sa * sb, -sa * cb * cg - ca * sg, ca * cg - sa * cb * sg;
  return r;
}

}  // namespace

TEST_CASE("two-photon lift of the two-mode family matches its closed form") {
  auto rng = test::seeded_rng(601);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  for (int trial = 0; trial < 5; ++trial) {
    const double al = angle(rng), be = angle(rng), ga = angle(rng);
    const CMatrix lift =
        photonic_homomorphism(two_mode_scattering(al, be, ga), 2).matrix();
    CHECK(test::matrix_distance(lift, lifted_two_mode(al, be, ga)) < 1e-12);
  }
}

TEST_CASE("mode-space transfer of the two-mode family matches its closed form") {
  auto rng = test::seeded_rng(602);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  const ModeHermitianBasis ggm = ggm_basis(2);
  for (int trial = 0; trial < 5; ++trial) {
    const double al = angle(rng), be = angle(rng), ga = angle(rng);
    const RMatrix r = htm_scattering(two_mode_scattering(al, be, ga), ggm);
    CHECK(max_abs((r - mode_transfer_two_mode(al, be, ga)).eval()) < 1e-10);
  }
}

TEST_CASE("transfer matrices of lifted unitaries are structured orthogonal") {
  auto rng = test::seeded_rng(603);
  for (auto [n, m] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    const FramePtr frame = test::shared_frame(n, m);
    const CMatrix s = haar_unitary(m, rng);
    const MultiPhotonUnitary v = photonic_homomorphism(s, n);
    const TransferMatrix r = htm(v, frame);
    const int full = frame->size();
    const int tangent = frame->tangent_size();

    CHECK(max_abs((r.matrix().transpose() * r.matrix() -
                   RMatrix::Identity(full, full)).eval()) < 1e-9);
    CHECK(r.scalar_entry() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.block_leakage() < 1e-10);
    CHECK(r.tangent_block().rows() == tangent);
    CHECK(r.perpendicular_block().rows() == full - tangent);

    // The tangent block acts exactly like the mode-space transfer matrix.
    const RMatrix mode = htm_scattering(s, ggm_basis(m));
    CHECK(max_abs((r.tangent_block() - mode).eval()) < 1e-10);
  }
}

TEST_CASE("transfer matrix maps coefficient vectors covariantly") {
  auto rng = test::seeded_rng(604);
  const FramePtr frame = test::shared_frame(2, 2);
  const CMatrix rho = random_density(3, rng);
  const DensityState state = density_vector(rho, frame);
  const MultiPhotonUnitary v = photonic_homomorphism(haar_unitary(2, rng), 2);
  const TransferMatrix r = htm(v, frame);
  const DensityState evolved = evolve(state, v);
  CHECK((r.matrix() * state.coeffs() - evolved.coeffs()).cwiseAbs().maxCoeff()
        < 1e-12);
}

TEST_CASE("non-lifted unitaries may leak between blocks") {
  auto rng = test::seeded_rng(605);
  const FramePtr frame = test::shared_frame(2, 2);
  const CMatrix u = haar_unitary(3, rng);
  const MultiPhotonUnitary v(u, frame->basis_ptr(), false);
  const TransferMatrix r = htm(v, frame);
  CHECK(max_abs((r.matrix().transpose() * r.matrix() -
                 RMatrix::Identity(9, 9)).eval()) < 1e-9);
  CHECK(r.block_leakage() > 1e-3);
}

TEST_CASE("claiming lift structure for a generic unitary is rejected") {
  auto rng = test::seeded_rng(606);
  const FramePtr frame = test::shared_frame(2, 2);
  const CMatrix u = haar_unitary(3, rng);
  const MultiPhotonUnitary v(u, frame->basis_ptr(), true);
  CHECK_THROWS_AS(htm(v, frame), std::runtime_error);
}

TEST_CASE("transfer construction requires matching sectors") {
  auto rng = test::seeded_rng(607);
  const FramePtr frame22 = test::shared_frame(2, 2);
  const MultiPhotonUnitary v = photonic_homomorphism(haar_unitary(3, rng), 2);
  CHECK_THROWS_AS(htm(v, frame22), std::invalid_argument);
}
