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
#include <random>
#include <stdexcept>

#include "lonsim/dip.hpp"
#include "test_helpers.hpp"

using namespace lonsim;

namespace {

DipModel demo_model() {
  DipModel model;
  model.a = 1.0;
  model.b = 0.968;
  model.sigma = 0.9;
  model.x0 = 0.3;
  model.k = 3.0;
  return model;
}

RVector demo_delays() {
  RVector delays(81);
  for (int i = 0; i < 81; ++i) delays(i) = -4.5 + 0.12 * i;
  return delays;
}

}  // namespace

TEST_CASE("the dip model evaluates its closed form") {
  const DipModel model = demo_model();
  CHECK(model(model.x0) == doctest::Approx(model.a - model.b).epsilon(1e-12));
  CHECK(model.visibility() == doctest::Approx(0.968).epsilon(1e-12));

  // Far from the dip the rate returns to the baseline.
  CHECK(model(model.x0 + 50.0) == doctest::Approx(model.a).epsilon(1e-9));

  // The envelope-times-sinc profile is symmetric about the center.
  for (double d : {0.3, 0.9, 2.1}) {
    CHECK(model(model.x0 + d) ==
          doctest::Approx(model(model.x0 - d)).epsilon(1e-12));
  }

  const double d = 0.7;
  const double z = model.k * d;
  const double expected = model.a - model.b *
      std::exp(-model.sigma * model.sigma * d * d / 2.0) * (std::sin(z) / z);
  CHECK(model(model.x0 + d) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("vector evaluation matches pointwise evaluation") {
  const DipModel model = demo_model();
  const RVector delays = demo_delays();
  const RVector rates = hom_dip(delays, model);
  REQUIRE(rates.size() == delays.size());
  for (int i = 0; i < delays.size(); ++i) {
    CHECK(rates(i) == doctest::Approx(hom_dip(delays(i), model)).epsilon(1e-12));
  }
}

TEST_CASE("a zero-frequency beat reduces to the Gaussian envelope") {
  DipModel model = demo_model();
  model.k = 0.0;
  const double d = 1.3;
  const double expected = model.a - model.b *
      std::exp(-model.sigma * model.sigma * d * d / 2.0);
  CHECK(model(model.x0 + d) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("noiseless synthetic data is recovered exactly") {
  const DipModel truth = demo_model();
  const RVector delays = demo_delays();
  const RVector rates = hom_dip(delays, truth);
  const DipFit fit = fit_hom_dip(delays, rates);
  CHECK(fit.converged);
  CHECK(fit.model.a == doctest::Approx(truth.a).epsilon(1e-6));
  CHECK(fit.model.b == doctest::Approx(truth.b).epsilon(1e-6));
  CHECK(fit.model.sigma == doctest::Approx(truth.sigma).epsilon(1e-5));
  CHECK(fit.model.x0 == doctest::Approx(truth.x0).epsilon(1e-5));
  CHECK(fit.model.k == doctest::Approx(truth.k).epsilon(1e-5));
  CHECK(fit.residual < 1e-8);
}

TEST_CASE("noisy realizations recover the parameters within five percent") {
  const DipModel truth = demo_model();
  const RVector delays = demo_delays();
  const RVector clean = hom_dip(delays, truth);

  int good = 0;
  const int trials = 30;
  for (int trial = 0; trial < trials; ++trial) {
    auto rng = test::seeded_rng(1300 + static_cast<std::uint64_t>(trial));
    std::normal_distribution<double> noise(0.0, 0.01);
    RVector rates = clean;
    for (int i = 0; i < rates.size(); ++i) rates(i) += noise(rng);
    const DipFit fit = fit_hom_dip(delays, rates);
    if (!fit.converged) continue;
    const bool ok =
        std::abs(fit.model.a - truth.a) / truth.a < 0.05 &&
        std::abs(fit.model.b - truth.b) / truth.b < 0.05 &&
        std::abs(fit.model.sigma - truth.sigma) / truth.sigma < 0.05 &&
        std::abs(fit.model.x0 - truth.x0) / std::abs(truth.x0) < 0.05 &&
        std::abs(fit.model.k - truth.k) / truth.k < 0.05;
    if (ok) ++good;
  }
  CHECK(good >= 28);
}

TEST_CASE("fit input must be two matching series of at least six points") {
  const RVector delays = demo_delays();
  CHECK_THROWS_AS(fit_hom_dip(delays, RVector::Zero(80)),
                  std::invalid_argument);
  CHECK_THROWS_AS(fit_hom_dip(RVector::Zero(5), RVector::Zero(5)),
                  std::invalid_argument);
}
