// Copyright 2026 The ptcoul Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptcoul/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>

namespace ptcoul {

namespace {

int count_real(int n_points, double coupling, double exponent, double reality_tolerance) {
  const auto h = build_coulomb_hamiltonian(n_points, coupling, exponent);
  return eigenvalues(h.matrix, reality_tolerance).count_real();
}

// Pairs indices of `a` with indices of `b` greedily by increasing distance.
// Returns assignment[i] = index into b matched to a[i].
template <typename Distance>
std::vector<Eigen::Index> greedy_assignment(Eigen::Index n, Distance distance) {
  std::vector<std::tuple<double, Eigen::Index, Eigen::Index>> pairs;
  pairs.reserve(static_cast<std::size_t>(n * n));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) pairs.emplace_back(distance(i, j), i, j);
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<Eigen::Index> assignment(static_cast<std::size_t>(n), -1);
  std::vector<bool> taken(static_cast<std::size_t>(n), false);
  Eigen::Index assigned = 0;
  for (const auto& [d, i, j] : pairs) {
    if (assignment[static_cast<std::size_t>(i)] >= 0 || taken[static_cast<std::size_t>(j)]) {
      continue;
    }
    assignment[static_cast<std::size_t>(i)] = j;
    taken[static_cast<std::size_t>(j)] = true;
    if (++assigned == n) break;
  }
  return assignment;
}

void locate_transitions(int n_points, double exponent, double reality_tolerance, double tolerance,
                        double lo, int n_lo, double hi, int n_hi,
                        std::vector<ExceptionalPoint>& out) {
  if (n_lo == n_hi) return;
  if (hi - lo <= tolerance) {
    if ((n_lo - n_hi) % 2 != 0) {
      throw DomainError("ambiguous reality transition near a = " + std::to_string(lo) +
                        ": n_real jumps from " + std::to_string(n_lo) + " to " +
                        std::to_string(n_hi) + " (odd change)");
    }
    out.push_back({lo, n_lo, n_hi});
    return;
  }
  const double mid = 0.5 * (lo + hi);
  const int n_mid = count_real(n_points, mid, exponent, reality_tolerance);
  locate_transitions(n_points, exponent, reality_tolerance, tolerance, lo, n_lo, mid, n_mid, out);
  locate_transitions(n_points, exponent, reality_tolerance, tolerance, mid, n_mid, hi, n_hi, out);
}

}  // namespace

std::array<Complex, 4> closed_form_spectrum_n4(double coupling) {
  const double a2 = coupling * coupling;
  const Complex inner = std::sqrt(Complex(405.0 - 720.0 * a2 + 64.0 * a2 * a2, 0.0));
  std::array<Complex, 4> out;
  std::size_t k = 0;
  for (const double outer : {-1.0, 1.0}) {
    for (const double sign : {-1.0, 1.0}) {
      const Complex root = std::sqrt(Complex(54.0 - 20.0 * a2, 0.0) + 2.0 * sign * inner);
      out[k++] = 2.0 + outer * root / 6.0;
    }
  }
  std::sort(out.begin(), out.end(), [](const Complex& x, const Complex& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return out;
}

double reality_bound_n4() { return 0.75 * std::sqrt(10.0 - 4.0 * std::sqrt(5.0)); }

RealityReport reality_report(const LatticeHamiltonian& h, double tolerance) {
  const Spectrum s = eigenvalues(h.matrix, tolerance);
  RealityReport out;
  out.coupling = h.coupling;
  out.size = static_cast<int>(s.size());
  out.n_real = s.count_real();
  out.fully_real = out.n_real == out.size;
  out.fully_complex = out.n_real == 0;
  return out;
}

double critical_coupling(int n_points, double exponent, double tolerance,
                         double reality_tolerance) {
  if (!(tolerance > 0.0)) throw DomainError("tolerance must be positive");
  auto fully_real = [&](double a) {
    return count_real(n_points, a, exponent, reality_tolerance) == n_points;
  };
  if (!fully_real(0.0)) throw DomainError("spectrum is not real even at a = 0");

  double upper = 2.0;
  while (fully_real(upper)) {
    upper *= 2.0;
    if (upper > 64.0) {
      throw DomainError("spectrum stays real up to a = 64; no critical coupling in range");
    }
  }

  constexpr int kScan = 64;
  std::vector<bool> scan(kScan + 1);
  for (int i = 0; i <= kScan; ++i) scan[i] = fully_real(upper * i / kScan);
  const auto first_false = std::find(scan.begin(), scan.end(), false) - scan.begin();
  for (auto i = first_false; i < kScan; ++i) {
    if (scan[i + 1]) {
      throw DomainError("reality predicate is not monotone on [" +
                        std::to_string(upper * static_cast<double>(i) / kScan) + ", " +
                        std::to_string(upper * static_cast<double>(i + 1) / kScan) + "]");
    }
  }

  double lo = upper * static_cast<double>(first_false - 1) / kScan;
  double hi = upper * static_cast<double>(first_false) / kScan;
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    (fully_real(mid) ? lo : hi) = mid;
  }
  return lo;
}

std::vector<ExceptionalPoint> exceptional_points(int n_points, double exponent, double a_max,
                                                 double tolerance, double reality_tolerance,
                                                 int scan_samples) {
  if (!(a_max > 0.0)) throw DomainError("a_max must be positive");
  if (!(tolerance > 0.0)) throw DomainError("tolerance must be positive");
  if (scan_samples < 1) throw DomainError("scan_samples must be >= 1");

  std::vector<ExceptionalPoint> out;
  double prev_a = 0.0;
  int prev_n = count_real(n_points, prev_a, exponent, reality_tolerance);
  for (int i = 1; i <= scan_samples; ++i) {
    const double a = a_max * i / scan_samples;
    const int n = count_real(n_points, a, exponent, reality_tolerance);
    locate_transitions(n_points, exponent, reality_tolerance, tolerance, prev_a, prev_n, a, n, out);
    prev_a = a;
    prev_n = n;
  }
  return out;
}

CVector match_continuation(const CVector& previous, const CVector& next) {
  const Eigen::Index n = previous.size();
  if (next.size() != n) throw DomainError("match_continuation: size mismatch");
  const auto assignment = greedy_assignment(
      n, [&](Eigen::Index i, Eigen::Index j) { return std::abs(previous(i) - next(j)); });
  CVector out(n);
  for (Eigen::Index i = 0; i < n; ++i) out(i) = next(assignment[static_cast<std::size_t>(i)]);
  return out;
}

double updown_symmetry_defect(const CVector& eigenvalues) {
  const Eigen::Index n = eigenvalues.size();
  const auto assignment = greedy_assignment(n, [&](Eigen::Index i, Eigen::Index j) {
    return std::abs(eigenvalues(i) - (4.0 - std::conj(eigenvalues(j))));
  });
  double worst = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto j = assignment[static_cast<std::size_t>(i)];
    worst = std::max(worst, std::abs(eigenvalues(i) - (4.0 - std::conj(eigenvalues(j)))));
  }
  return worst;
}

SweepTable sweep(int n_points, double exponent, double a_min, double a_max, int steps,
                 double reality_tolerance) {
  if (steps < 2) throw DomainError("sweep needs steps >= 2");
  if (!(a_min < a_max)) throw DomainError("sweep needs a_min < a_max");

  SweepTable table;
  table.n_points = n_points;
  table.exponent = exponent;
  table.rows.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double a = a_min + (a_max - a_min) * i / (steps - 1);
    const auto h = build_coulomb_hamiltonian(n_points, a, exponent);
    const Spectrum s = eigenvalues(h.matrix, reality_tolerance);
    SweepRow row;
    row.coupling = a;
    row.n_real = s.count_real();
    if (table.rows.empty()) {
      row.eigenvalues = s.eigenvalues;
    } else {
      const SweepRow& prev = table.rows.back();
      row.eigenvalues = match_continuation(prev.eigenvalues, s.eigenvalues);
      const double displacement = (row.eigenvalues - prev.eigenvalues).cwiseAbs().maxCoeff();
      double min_gap = std::numeric_limits<double>::infinity();
      for (Eigen::Index p = 0; p < row.eigenvalues.size(); ++p) {
        for (Eigen::Index q = p + 1; q < row.eigenvalues.size(); ++q) {
          min_gap = std::min(min_gap, std::abs(row.eigenvalues(p) - row.eigenvalues(q)));
        }
      }
      row.ambiguous_ordering = row.n_real != prev.n_real || min_gap < displacement;
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace ptcoul
