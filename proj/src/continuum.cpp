// Copyright 2026 The ptcoul Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptcoul/continuum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace ptcoul {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};
constexpr int kMaxKummerTerms = 10000;

bool is_nonpositive_integer(Complex z) {
  if (z.imag() != 0.0) return false;
  const double r = std::round(z.real());
  return r <= 0.0 && std::abs(z.real() - r) <= 1e-14 * std::max(1.0, std::abs(r));
}

bool is_integer(double v) {
  return std::abs(v - std::round(v)) <= 1e-14 * std::max(1.0, std::abs(v));
}

Complex kummer_series(Complex alpha, Complex beta, Complex argument) {
  const double size = std::abs(argument);
  Complex sum(1.0, 0.0);
  Complex term(1.0, 0.0);
  for (int n = 0; n < kMaxKummerTerms; ++n) {
    const double dn = static_cast<double>(n);
    term *= (alpha + dn) / (beta + dn) * argument / (dn + 1.0);
    sum += term;
    if (term == Complex(0.0, 0.0)) return sum;
    if (dn + 1.0 > size && std::abs(term) <= 1e-16 * std::abs(sum)) return sum;
  }
  throw ConvergenceError("1F1 series did not converge within 10^4 terms");
}

}  // namespace

Complex kummer_1f1(Complex alpha, Complex beta, Complex argument) {
  if (is_nonpositive_integer(beta)) {
    throw DomainError("1F1: beta is a non-positive integer (pole)");
  }
  const double size = std::abs(argument);
  if (size > kKummerMaxArgument) {
    throw DomainError("1F1: |argument| = " + std::to_string(size) +
                      " is outside the series regime (<= 30)");
  }
  // Kummer's transformation avoids cancellation for Re x < 0.
  if (argument.real() < 0.0 && !is_nonpositive_integer(alpha)) {
    return std::exp(argument) * kummer_series(beta - alpha, beta, -argument);
  }
  return kummer_series(alpha, beta, argument);
}

ContinuumSpec::ContinuumSpec(double angular, double charge, double wave_number, Complex c1,
                             Complex c2)
    : angular_(angular), charge_(charge), wave_number_(wave_number), c1_(c1), c2_(c2) {
  if (!(angular > -0.5)) throw DomainError("angular momentum L must exceed -1/2");
  if (!(wave_number > 0.0)) throw DomainError("wave number k must be positive");
  if (c2 != Complex(0.0, 0.0) && !has_second_solution()) {
    throw DomainError("Psi_2 needs 2L outside the integers; set C2 = 0");
  }
}

bool ContinuumSpec::has_second_solution() const { return !is_integer(2.0 * angular_); }

std::pair<Complex, Complex> psi_solutions(const ContinuumSpec& spec, Complex x) {
  if (x == Complex(0.0, 0.0)) throw DomainError("Psi is singular at x = 0");
  const double l = spec.angular();
  const double k = spec.wave_number();
  const Complex z = 2.0 * k * x;
  if (std::abs(z) > kKummerMaxArgument) {
    throw DomainError("|2kx| = " + std::to_string(std::abs(z)) +
                      " exceeds the series regime; use a smaller contour");
  }
  const Complex shift = kI * spec.charge() / (2.0 * k);
  const Complex damping = std::exp(-k * x);
  const Complex psi1 =
      damping * std::pow(x, l + 1.0) * kummer_1f1(1.0 + l + shift, 2.0 * l + 2.0, z);
  Complex psi2(std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN());
  if (spec.has_second_solution()) {
    psi2 = damping * std::pow(x, -l) * kummer_1f1(-l + shift, -2.0 * l, z);
  }
  return {psi1, psi2};
}

Complex psi_general(const ContinuumSpec& spec, Complex x) {
  if (spec.c1() == Complex(0.0, 0.0) && spec.c2() == Complex(0.0, 0.0)) return {0.0, 0.0};
  const auto [psi1, psi2] = psi_solutions(spec, x);
  Complex out(0.0, 0.0);
  if (spec.c1() != Complex(0.0, 0.0)) out += spec.c1() * psi1;
  if (spec.c2() != Complex(0.0, 0.0)) out += spec.c2() * psi2;
  return out;
}

Complex contour_branch_point(ContourBranch branch, double epsilon, double s) {
  const double joint = 0.5 * kPi * epsilon;
  switch (branch) {
    case ContourBranch::kLeft:
      return Complex(-epsilon, -(s + joint));
    case ContourBranch::kArc:
      return epsilon * std::exp(kI * (s / epsilon + 1.5 * kPi));
    case ContourBranch::kRight:
      return Complex(epsilon, s - joint);
  }
  return {};
}

ContourBranch contour_branch(double epsilon, double s) {
  const double joint = 0.5 * kPi * epsilon;
  if (s < -joint) return ContourBranch::kLeft;
  if (s > joint) return ContourBranch::kRight;
  return ContourBranch::kArc;
}

Complex contour_point(double epsilon, double s) {
  if (!(epsilon > 0.0)) throw DomainError("contour radius epsilon must be positive");
  return contour_branch_point(contour_branch(epsilon, s), epsilon, s);
}

std::pair<Complex, Complex> contour_derivatives(double epsilon, double s) {
  switch (contour_branch(epsilon, s)) {
    case ContourBranch::kLeft:
      return {-kI, 0.0};
    case ContourBranch::kRight:
      return {kI, 0.0};
    case ContourBranch::kArc: {
      const Complex rot = std::exp(kI * (s / epsilon + 1.5 * kPi));
      return {kI * rot, -rot / epsilon};
    }
  }
  return {};
}

ContourSpec make_contour(double epsilon, double s_min, double s_max, int n_samples) {
  if (!(epsilon > 0.0)) throw DomainError("contour radius epsilon must be positive");
  if (n_samples < 3 || !(s_min < s_max)) {
    throw DomainError("contour needs s_min < s_max and at least 3 samples");
  }
  ContourSpec c;
  c.epsilon = epsilon;
  c.samples.reserve(static_cast<std::size_t>(n_samples));
  const double h = (s_max - s_min) / (n_samples - 1);
  for (int i = 0; i < n_samples; ++i) {
    const double s = s_min + h * i;
    c.samples.push_back({s, contour_point(epsilon, s)});
  }
  return c;
}

ContourSpec coarsen(const ContourSpec& c) {
  ContourSpec out;
  out.epsilon = c.epsilon;
  for (std::size_t i = 0; i < c.samples.size(); i += 2) out.samples.push_back(c.samples[i]);
  return out;
}

namespace {

struct RawResidual {
  double residual = 0.0;
  int points = 0;
};

RawResidual raw_residual(const ContinuumSpec& spec, const ContourSpec& contour) {
  const auto& samples = contour.samples;
  const std::size_t n = samples.size();
  RawResidual out;
  if (n < 3) return out;
  std::vector<Complex> psi(n);
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    psi[i] = psi_general(spec, samples[i].x);
    scale = std::max(scale, std::abs(psi[i]));
  }
  if (scale == 0.0) return out;

  const double l = spec.angular();
  const double k = spec.wave_number();
  const double eps = contour.epsilon;
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const auto branch = contour_branch(eps, samples[i].s);
    if (contour_branch(eps, samples[i - 1].s) != branch ||
        contour_branch(eps, samples[i + 1].s) != branch) {
      continue;
    }
    const double h = samples[i + 1].s - samples[i].s;
    const Complex d1 = (psi[i + 1] - psi[i - 1]) / (2.0 * h);
    const Complex d2 = (psi[i + 1] - 2.0 * psi[i] + psi[i - 1]) / (h * h);
    const auto [xs, xss] = contour_derivatives(eps, samples[i].s);
    const Complex dpsi = d1 / xs;
    const Complex d2psi = (d2 - dpsi * xss) / (xs * xs);
    const Complex x = samples[i].x;
    const Complex r = -d2psi + l * (l + 1.0) * psi[i] / (x * x) + kI * spec.charge() * psi[i] / x +
                      k * k * psi[i];
    worst = std::max(worst, std::abs(r));
    ++out.points;
  }
  out.residual = worst / scale;
  return out;
}

}  // namespace

ResidualReport ode_residual_on_contour(const ContinuumSpec& spec, const ContourSpec& contour) {
  ResidualReport out;
  const RawResidual fine = raw_residual(spec, contour);
  const RawResidual coarse = raw_residual(spec, coarsen(contour));
  out.residual = fine.residual;
  out.coarse_residual = coarse.residual;
  out.points_checked = fine.points;
  if (out.residual > 1e-2 && out.coarse_residual > 1.5 * out.residual) {
    throw DomainError("contour spacing " + std::to_string(contour.spacing()) +
                      " is too coarse: residual " + std::to_string(out.residual) +
                      " is dominated by discretization");
  }
  return out;
}

}  // namespace ptcoul
