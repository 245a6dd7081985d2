/**
 * This code is part of lonsim.
 *
 * (C) Copyright the lonsim developers 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "lonsim/invariants.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "lonsim/fock_basis.hpp"
#include "lonsim/jordan_schwinger.hpp"

namespace lonsim {

namespace {

constexpr double kRelationTol = 1e-10;
constexpr double kPurityTol = 1e-9;

double expectation(const CMatrix& rho, const CMatrix& op) {
  return (rho * op).trace().real();
}

/**
 * Sum of squared expectations of the m^2 physical mode observables,
 * evaluated observable by observable: the m number operators, then for
 * each pair j < k the symmetric and antisymmetric quadratures
 * (a_j^dag a_k + a_k^dag a_j)/sqrt(2) and -i(a_j^dag a_k - a_k^dag a_j)
 * /sqrt(2). Kept as an explicit sum so it stays an independent route from
 * the frame-coordinate identity it is checked against.
 */
double observable_sum(const DensityState& state) {
  const FockBasis& basis = state.frame().basis();
  const int m = basis.modes();
  const CMatrix& rho = state.rho();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  double total = 0.0;
  for (int j = 0; j < m; ++j) {
    const double mean = expectation(rho, number_operator(j, basis));
    total += mean * mean;
  }
  for (int j = 0; j < m; ++j) {
    for (int k = j + 1; k < m; ++k) {
      CMatrix sym = CMatrix::Zero(m, m);
      sym(j, k) = inv_sqrt2;
      sym(k, j) = inv_sqrt2;
      CMatrix anti = CMatrix::Zero(m, m);
      anti(j, k) = Complex(0.0, -inv_sqrt2);
      anti(k, j) = Complex(0.0, inv_sqrt2);
      const double mean_sym = expectation(rho, js_map(sym, basis));
      const double mean_anti = expectation(rho, js_map(anti, basis));
      total += mean_sym * mean_sym + mean_anti * mean_anti;
    }
  }
  return total;
}

}  // namespace

InvariantSet invariants(const DensityState& state) {
  const HermitianFrame& frame = state.frame();
  const int dim = frame.dim();
  const int m = frame.modes();
  const int n = frame.photons();
  const int tangent = frame.tangent_size();
  const RVector& coeffs = state.coeffs();

  InvariantSet out;
  out.i_n = coeffs(0) * coeffs(0);
  for (int i = 1; i < tangent; ++i) {
    out.i_t_prime += coeffs(i) * coeffs(i);
  }
  out.i_t = out.i_n + out.i_t_prime;
  for (int i = tangent; i < frame.size(); ++i) {
    out.i_p += coeffs(i) * coeffs(i);
  }
  out.purity = (state.rho() * state.rho()).trace().real();
  out.i_o = observable_sum(state);

  if (std::abs(out.i_n - 1.0 / dim) > kRelationTol) {
    std::ostringstream msg;
    msg << "invariants: i_n = " << out.i_n << " differs from 1/M = "
        << 1.0 / dim;
    throw std::runtime_error(msg.str());
  }

  const double relation =
      double(binomial(m + n, m + 1)) * out.i_t_prime + double(n) * n / m;
  if (std::abs(out.i_o - relation) > kRelationTol) {
    std::ostringstream msg;
    msg << "invariants: observable route i_o = " << out.i_o
        << " disagrees with coordinate route " << relation;
    throw std::runtime_error(msg.str());
  }

  if (std::abs(out.i_t + out.i_p - out.purity) > kPurityTol) {
    std::ostringstream msg;
    msg << "invariants: i_t + i_p = " << out.i_t + out.i_p
        << " differs from purity " << out.purity;
    throw std::runtime_error(msg.str());
  }

  if (m == 2 && n >= 1) {
    const ItprimeRange range = itprime_range(n);
    if (out.i_t_prime < range.lo - kPurityTol ||
        out.i_t_prime > range.hi + kPurityTol) {
      std::ostringstream msg;
      msg << "invariants: i_t_prime = " << out.i_t_prime
          << " outside attainable range [" << range.lo << ", " << range.hi
          << "]";
      throw std::runtime_error(msg.str());
    }
  }
  return out;
}

ItprimeRange itprime_range(int photons) {
  if (photons < 1) {
    throw std::invalid_argument("itprime_range: photons must be >= 1");
  }
  ItprimeRange range;
  range.lo = 0.0;
  range.hi =
      3.0 * photons / (double(photons + 1) * double(photons + 2));
  range.sphere_radius = std::sqrt(range.hi);
  return range;
}

std::uint64_t min_tomography_settings(int photons, int modes) {
  if (photons < 1) {
    throw std::invalid_argument(
        "min_tomography_settings: photons must be >= 1");
  }
  if (modes < 2) {
    throw std::invalid_argument("min_tomography_settings: modes must be >= 2");
  }
  return binomial(photons + modes, photons) -
         binomial(photons + modes - 2, modes);
}

}  // namespace lonsim
