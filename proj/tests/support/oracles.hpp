// Copyright 2026 The ptcoul Authors
// SPDX-License-Identifier: Apache-2.0

// Independent reference computations used only by the tests.

#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <tuple>
#include <vector>

namespace ptcoul::oracle {

/// 2 - 2 cos(j pi / (N + 1)), j = 1..N: spectrum of the Dirichlet Laplacian.
inline std::vector<double> dirichlet_laplacian(int n) {
  std::vector<double> out;
  for (int j = 1; j <= n; ++j) out.push_back(2.0 - 2.0 * std::cos(j * std::numbers::pi / (n + 1)));
  return out;
}

/// Roots of a monic polynomial (coefficients highest degree first) by the
/// Aberth-Ehrlich simultaneous iteration.
template <typename Real>
std::vector<std::complex<Real>> aberth_roots(const std::vector<std::complex<Real>>& coeffs,
                                             int max_iter = 500) {
  using C = std::complex<Real>;
  const int n = static_cast<int>(coeffs.size()) - 1;
  std::vector<C> z(n);
  Real radius = 0;
  for (int i = 1; i <= n; ++i) radius = std::max(radius, std::abs(coeffs[i]));
  radius = 1 + radius;
  const C center = -coeffs[1] / (Real(n) * coeffs[0]);
  for (int i = 0; i < n; ++i) {
    const Real angle = Real(2) * std::numbers::pi_v<Real> * (Real(i) + Real(0.25)) / Real(n);
    z[i] = center + Real(0.5) * radius * C(std::cos(angle), std::sin(angle));
  }
  auto eval = [&](const C& x, C& p, C& dp) {
    p = coeffs[0];
    dp = C(0);
    for (int i = 1; i <= n; ++i) {
      dp = dp * x + p;
      p = p * x + coeffs[i];
    }
  };
  for (int iter = 0; iter < max_iter; ++iter) {
    Real largest = 0;
    for (int i = 0; i < n; ++i) {
      C p, dp;
      eval(z[i], p, dp);
      if (p == C(0)) continue;
      const C ratio = p / dp;
      C repulsion(0);
      for (int j = 0; j < n; ++j) {
        if (j != i) repulsion += C(1) / (z[i] - z[j]);
      }
      const C step = ratio / (C(1) - ratio * repulsion);
      z[i] -= step;
      largest = std::max(largest, std::abs(step));
    }
    if (largest <= std::numeric_limits<Real>::epsilon() * 4) break;
  }
  return z;
}

/// min over permutations of max_i |a_i - b_perm(i)|, by enumeration.
inline double permutation_distance(std::vector<std::complex<double>> a,
                                   const std::vector<std::complex<double>>& b) {
  std::vector<int> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size() && worst < best; ++i) {
      worst = std::max(worst, std::abs(a[i] - b[static_cast<std::size_t>(perm[i])]));
    }
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Largest |a_i - b_i| after sorting both lists by (Re, Im). Only meaningful
/// for well-separated spectra.
inline double sorted_distance(std::vector<std::complex<double>> a,
                              std::vector<std::complex<double>> b) {
  auto key = [](const std::complex<double>& x, const std::complex<double>& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  };
  std::sort(a.begin(), a.end(), key);
  std::sort(b.begin(), b.end(), key);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

/// Largest |a_i - b_j| after pairing by globally increasing distance.
inline double matched_distance(const std::vector<std::complex<double>>& a,
                               const std::vector<std::complex<double>>& b) {
  std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) pairs.emplace_back(std::abs(a[i] - b[j]), i, j);
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<bool> used_a(a.size()), used_b(b.size());
  double worst = 0.0;
  for (const auto& [d, i, j] : pairs) {
    if (used_a[i] || used_b[j]) continue;
    used_a[i] = used_b[j] = true;
    worst = std::max(worst, d);
  }
  return worst;
}

template <typename Vec>
std::vector<std::complex<double>> to_vector(const Vec& v) {
  std::vector<std::complex<double>> out;
  for (Eigen::Index i = 0; i < v.size(); ++i) out.emplace_back(v(i));
  return out;
}

inline Eigen::VectorXcd random_vector(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = {g(rng), g(rng)};
  return v;
}

}  // namespace ptcoul::oracle
