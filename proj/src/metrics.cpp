// Copyright 2026 The ptcoul Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptcoul/metrics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ptcoul/lattice.hpp"

namespace ptcoul {

namespace {

constexpr Complex kI{0.0, 1.0};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::string describe(const MetricProvenance& p) {
  std::ostringstream os;
  std::visit(
      Overloaded{
          [&](const provenance::Biorthogonal& b) {
            os << "biorthogonal(";
            for (std::size_t i = 0; i < b.weights.size(); ++i) {
              os << (i ? "," : "") << b.weights[i];
            }
            os << ")";
          },
          [&](const provenance::N2Family& f) {
            os << "n2_family(k=" << f.k_scale << ",m=" << f.m_shape << ",a=" << f.coupling << ")";
          },
          [&](const provenance::N4Ansatz& f) {
            os << "n4_ansatz(k=" << f.k_scale << ",m=" << f.m_shape << ",r=" << f.r_inner
               << ",eta=" << f.eta_corner << ",a=" << f.coupling << ",z=" << f.exponent << ")";
          },
          [&](const provenance::CptCharge& c) { os << "cpt(a=" << c.coupling << ")"; },
          [&](const provenance::External&) { os << "external"; },
      },
      p);
  return os.str();
}

MetricCandidate::MetricCandidate(CMatrix matrix, MetricProvenance provenance)
    : matrix_(std::move(matrix)), provenance_(std::move(provenance)) {
  if (matrix_.rows() != matrix_.cols()) throw DomainError("metric must be square");
  if (!matrix_.allFinite()) throw DomainError("metric has non-finite entries");
  const double err = hermiticity_error(matrix_);
  if (err > kHermiticityTolerance) {
    throw DomainError("metric is not Hermitian (relative error " + std::to_string(err) + ")");
  }
}

KappaWeights::KappaWeights(std::vector<double> weights) : weights_(std::move(weights)) {
  for (const double w : weights_) {
    if (!(w > 0.0) || !std::isfinite(w)) throw DomainError("kappa weights must be positive");
  }
}

MetricCandidate metric_from_biorthogonal(const EigenSystem& system, const KappaWeights& weights) {
  const Eigen::Index n = system.left.cols();
  if (static_cast<Eigen::Index>(weights.size()) != n) {
    throw DomainError("need one kappa weight per eigenvector (" + std::to_string(n) + ")");
  }
  if (!system.spectrum.fully_real()) {
    throw DomainError("no positive metric exists for complex spectrum");
  }
  CMatrix theta = CMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    theta.noalias() += weights.values()[static_cast<std::size_t>(k)] * system.left.col(k) *
                       system.left.col(k).adjoint();
  }
  // Symmetrize away rounding so the Hermitian invariant holds exactly.
  theta = (0.5 * (theta + theta.adjoint())).eval();
  return MetricCandidate(std::move(theta), provenance::Biorthogonal{weights.values()});
}

PositivityReport is_positive(const MetricCandidate& theta) {
  const Eigen::SelfAdjointEigenSolver<CMatrix> solver(theta.matrix(), Eigen::EigenvaluesOnly);
  PositivityReport out;
  if (theta.size() == 0) return out;
  out.min_eigenvalue = solver.eigenvalues().minCoeff();
  out.max_eigenvalue = solver.eigenvalues().maxCoeff();
  out.positive = out.min_eigenvalue > 0.0;
  return out;
}

int band_width(const MetricCandidate& theta, double tolerance) {
  const CMatrix& m = theta.matrix();
  const double cutoff = tolerance * m.cwiseAbs().maxCoeff();
  int width = 0;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (std::abs(m(r, c)) > cutoff) {
        width = std::max(width, static_cast<int>(std::abs(r - c)));
      }
    }
  }
  return width;
}

int dieudonne_solution_dimension(const CMatrix& h, double rank_tolerance) {
  const Eigen::Index n = h.rows();
  const Eigen::Index unknowns = n * n;
  RMatrix map(2 * n * n, unknowns);
  Eigen::Index column = 0;
  auto push = [&](const CMatrix& basis) {
    const CMatrix image = h.adjoint() * basis - basis * h;
    for (Eigen::Index i = 0; i < n * n; ++i) {
      map(2 * i, column) = image(i).real();
      map(2 * i + 1, column) = image(i).imag();
    }
    ++column;
  };
  for (Eigen::Index i = 0; i < n; ++i) {
    CMatrix e = CMatrix::Zero(n, n);
    e(i, i) = 1.0;
    push(e);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      CMatrix re = CMatrix::Zero(n, n);
      re(i, j) = 1.0;
      re(j, i) = 1.0;
      push(re);
      CMatrix im = CMatrix::Zero(n, n);
      im(i, j) = kI;
      im(j, i) = -kI;
      push(im);
    }
  }
  const Eigen::JacobiSVD<RMatrix> svd(map);
  const auto& sv = svd.singularValues();
  const double cutoff = rank_tolerance * (sv.size() ? sv(0) : 0.0);
  const auto rank = (sv.array() > cutoff).count();
  return static_cast<int>(unknowns - rank);
}

MetricCandidate n2_metric(double k_scale, double m_shape, double coupling) {
  Eigen::Matrix2cd theta;
  theta << k_scale, Complex(k_scale * m_shape, -k_scale * coupling),
      Complex(k_scale * m_shape, k_scale * coupling), k_scale;
  return MetricCandidate(theta, provenance::N2Family{k_scale, m_shape, coupling});
}

std::array<double, 2> n2_metric_eigenvalues(double k_scale, double m_shape, double coupling) {
  const double root =
      std::sqrt(k_scale * k_scale * m_shape * m_shape + k_scale * k_scale * coupling * coupling);
  return {k_scale - root, k_scale + root};
}

MetricCandidate n2_metric_angles(double k_scale, double beta, double gamma) {
  if (!(k_scale > 0.0)) throw DomainError("k must be positive for a positive metric");
  if (!(beta > 0.0 && beta < std::numbers::pi) || !(gamma > 0.0 && gamma < std::numbers::pi)) {
    throw DomainError("beta and gamma must lie in (0, pi)");
  }
  const double c = std::cos(beta);
  return n2_metric(k_scale, c * std::cos(gamma), c * std::sin(gamma));
}

MetricCandidate CptChargeN2::metric() const {
  const Eigen::Matrix2cd cp = charge * parity(2).cast<Complex>();
  return MetricCandidate(cp, provenance::CptCharge{coupling});
}

CptChargeN2 cpt_charge_n2(double coupling) {
  if (!(std::abs(coupling) < 1.0)) {
    throw DomainError("no real-spectrum CPT frame: |a| must be < 1");
  }
  CptChargeN2 out;
  out.coupling = coupling;
  out.scale = 1.0 / std::sqrt(1.0 - coupling * coupling);
  out.charge << -kI * coupling, 1.0, 1.0, kI * coupling;
  out.charge *= out.scale;
  return out;
}

ObservableCandidate n2_observable(double d_diag, double b_im, double c_im, double g_im,
                                  double coupling, double m_shape) {
  if (coupling == 0.0) {
    throw DomainError("observable family is singular at a = 0 (parametrization divides by a)");
  }
  const double a = coupling;
  ObservableCandidate out;
  out.d_diag = d_diag;
  out.b_im = b_im;
  out.c_im = c_im;
  out.g_im = g_im;
  out.g_re = d_diag - (b_im + c_im) / a;
  out.b_re = (g_im - b_im * m_shape) / a;
  out.c_re = (g_im + c_im * m_shape) / a;
  out.d_im = -g_im;
  out.matrix << Complex(out.g_re, g_im), Complex(out.b_re, b_im), Complex(out.c_re, c_im),
      Complex(d_diag, out.d_im);
  return out;
}

MetricCandidate n4_metric_ansatz(double k_scale, double m_shape, double r_inner, double eta_corner,
                                 double coupling, double exponent) {
  const double k = k_scale;
  const double m = m_shape;
  const double r = r_inner;
  const double eta = eta_corner;
  const double a = coupling;
  const double w = std::pow(3.0, exponent) * a;

  const Complex big_w(-w * w * k + r - k - k * w * a, w * m + m * a);
  const Complex big_z(m * a * a - w * w * m - m + eta,
                      -(k * w - k * a - k * w * a * a - r * w + w * w * w * k));
  const Complex outer(m, -k * w);              // m - i k w
  const Complex inner(eta, -(k * w + r * a));  // eta - i (k w + r a)

  Eigen::Matrix4cd theta;
  theta << k, outer, std::conj(big_w), std::conj(big_z), std::conj(outer), r, inner,
      std::conj(big_w), big_w, std::conj(inner), r, outer, big_z, big_w, std::conj(outer), k;
  return MetricCandidate(theta, provenance::N4Ansatz{k, m, r, eta, a, exponent});
}

std::array<double, 4> n4_unit_metric_eigenvalues(double coupling, double exponent) {
  const double a = coupling;
  const double w = std::pow(3.0, exponent) * a;
  const double a2 = a * a;
  const double w2 = w * w;
  const double w3 = w2 * w;
  const double shift = 0.5 * (w - a2 * w + w3);
  auto delta = [&](double sign) {
    return w3 * w3 + (2.0 - 2.0 * a2) * w2 * w2 + (sign * 8.0 + 4.0 * a) * w3 +
           (5.0 + sign * 8.0 * a + 6.0 * a2 + a2 * a2) * w2 + (4.0 * a + 4.0 * a2 * a) * w +
           4.0 * a2;
  };
  const double root_plus = 0.5 * std::sqrt(std::max(0.0, delta(1.0)));
  const double root_minus = 0.5 * std::sqrt(std::max(0.0, delta(-1.0)));
  std::array<double, 4> out{1.0 + shift - root_plus, 1.0 + shift + root_plus,
                            1.0 - shift - root_minus, 1.0 - shift + root_minus};
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ptcoul
