/**
 * This code is part of lonsim.
 *
 * (C) Copyright the lonsim developers 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "lonsim/random.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lonsim {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 finalizer over the combined word; decorrelates nearby
  // (master, index) pairs far better than addition alone.
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

CVector random_pure(int dim, std::mt19937_64& rng) {
  if (dim < 1) throw std::invalid_argument("random_pure: dim must be >= 1");
  std::normal_distribution<double> gauss(0.0, 1.0);
  CVector psi(dim);
  for (int i = 0; i < dim; ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    psi(i) = Complex(re, im);
  }
  const double norm = psi.norm();
  if (norm == 0.0) {
    psi.setZero();
    psi(0) = 1.0;
    return psi;
  }
  return psi / norm;
}

CMatrix random_density(int dim, std::mt19937_64& rng) {
  if (dim < 1) throw std::invalid_argument("random_density: dim must be >= 1");
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = Complex(re, im);
    }
  }
  CMatrix rho = g * g.adjoint();
  const double tr = rho.trace().real();
  if (tr <= 0.0) {
    return CMatrix::Identity(dim, dim) / double(dim);
  }
  return rho / tr;
}

std::vector<long> multinomial(long trials, const RVector& probs,
                              std::mt19937_64& rng) {
  if (trials < 0) throw std::invalid_argument("multinomial: trials < 0");
  if (probs.size() == 0) throw std::invalid_argument("multinomial: empty probs");
  double total = 0.0;
  for (Eigen::Index i = 0; i < probs.size(); ++i) {
    if (!(probs(i) >= -1e-12)) {
      throw std::invalid_argument("multinomial: negative probability");
    }
    total += std::max(probs(i), 0.0);
  }
  if (total <= 0.0) throw std::invalid_argument("multinomial: zero mass");

  // Chain of binomial draws conditioned on the remaining mass; exact and
  // O(k) per call instead of O(trials) categorical sampling.
  std::vector<long> counts(static_cast<std::size_t>(probs.size()), 0);
  long remaining = trials;
  double mass = total;
  for (Eigen::Index i = 0; i + 1 < probs.size() && remaining > 0; ++i) {
    const double p = std::max(probs(i), 0.0);
    double ratio = mass > 0.0 ? p / mass : 0.0;
    ratio = std::clamp(ratio, 0.0, 1.0);
    std::binomial_distribution<long> binom(remaining, ratio);
    const long draw = binom(rng);
    counts[static_cast<std::size_t>(i)] = draw;
    remaining -= draw;
    mass -= p;
  }
  counts.back() += remaining;
  return counts;
}

std::uint64_t fnv1a64(const void* data, std::size_t size) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < size; ++i) {
    hash ^= bytes[i];
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::uint64_t fnv1a64(const std::string& text) {
  return fnv1a64(text.data(), text.size());
}

}  // namespace lonsim
