// Copyright 2026 The ptcoul Authors
// SPDX-License-Identifier: Apache-2.0

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "ptcoul/lattice.hpp"
#include "ptcoul/metrics.hpp"
#include "ptcoul/spectra.hpp"
#include "support/oracles.hpp"

using namespace ptcoul;

namespace {

constexpr Complex kI{0.0, 1.0};

CMatrix coulomb(int n, double a, double z = -1.0) {
  return build_coulomb_hamiltonian(n, a, z).matrix;
}

RVector hermitian_eigenvalues(const CMatrix& m) {
  return Eigen::SelfAdjointEigenSolver<CMatrix>(m, Eigen::EigenvaluesOnly).eigenvalues();
}

MetricCandidate unit_biorthogonal(const CMatrix& h) {
  const auto sys = eigensystem(h);
  return metric_from_biorthogonal(sys, KappaWeights::ones(h.rows()));
}

}  // namespace

TEST_CASE("Dieudonne residual") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> k_dist(0.1, 5.0);
  std::uniform_real_distribution<double> m_dist(-3.0, 3.0);
  std::uniform_real_distribution<double> a_dist(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double a = a_dist(rng);
    const auto theta = n2_metric(k_dist(rng), m_dist(rng), a);
    CHECK(dieudonne_residual(coulomb(2, a), theta) <= 1e-14);
  }

  RMatrix sym = RMatrix::Random(5, 5);
  sym = (sym + sym.transpose()).eval();
  const CMatrix h = sym.cast<Complex>();
  CHECK(dieudonne_residual(h, MetricCandidate::external(CMatrix::Identity(5, 5))) == 0.0);

  CHECK(dieudonne_residual(coulomb(4, 0.5), MetricCandidate::external(CMatrix::Identity(4, 4))) >
        0.1);
  CHECK(dieudonne_residual(CMatrix::Zero(3, 3), CMatrix::Identity(3, 3)) == 0.0);
  CHECK_THROWS_AS(dieudonne_residual(CMatrix::Zero(3, 3), CMatrix::Identity(2, 2)), DomainError);
}

TEST_CASE("MetricCandidate and KappaWeights validate their input") {
  CMatrix bad = CMatrix::Identity(2, 2);
  bad(0, 1) = 0.5;
  CHECK_THROWS_AS(MetricCandidate::external(bad), DomainError);
  CHECK_THROWS_AS(MetricCandidate::external(CMatrix::Zero(2, 3)), DomainError);
  CMatrix nan = CMatrix::Identity(2, 2);
  nan(0, 0) = std::nan("");
  CHECK_THROWS_AS(MetricCandidate::external(nan), DomainError);

  CHECK_THROWS_AS(KappaWeights({1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(KappaWeights({1.0, -2.0}), DomainError);
  CHECK(KappaWeights::ones(3).values() == std::vector<double>{1.0, 1.0, 1.0});

  const auto sys = eigensystem(coulomb(4, 0.3));
  CHECK_THROWS_AS(metric_from_biorthogonal(sys, KappaWeights::ones(3)), DomainError);
}

TEST_CASE("biorthogonal metric of a Hermitian chain is the identity") {
  for (double z : {-1.0, -0.5, 0.3}) {
    const auto theta = unit_biorthogonal(coulomb(6, 0.0, z));
    CHECK((theta.matrix() - CMatrix::Identity(6, 6)).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("biorthogonal metric at N = 2 lies in the two-parameter family") {
  const double a = 0.5;
  const auto theta = unit_biorthogonal(coulomb(2, a));
  const CMatrix& t = theta.matrix();
  // Fit k from the diagonal and m from the real off-diagonal part.
  const double k = 0.5 * (t(0, 0).real() + t(1, 1).real());
  const double m = t(1, 0).real() / k;
  CHECK((n2_metric(k, m, a).matrix() - t).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("weighted biorthogonal metric at N = 6") {
  const CMatrix h = coulomb(6, 0.3);
  const auto theta = metric_from_biorthogonal(eigensystem(h), KappaWeights({1, 2, 3, 4, 5, 6}));
  CHECK(is_positive(theta).positive);
  CHECK(dieudonne_residual(h, theta) <= 1e-10);
  CHECK(hermiticity_error(theta.matrix()) <= 1e-14);
  CHECK(describe(theta.provenance()) == "biorthogonal(1,2,3,4,5,6)");
}

TEST_CASE("biorthogonal metric needs a real, simple spectrum") {
  const CMatrix complex_spectrum = coulomb(4, 1.0);
  try {
    unit_biorthogonal(complex_spectrum);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()) == "no positive metric exists for complex spectrum");
  }
  CHECK_THROWS_AS(unit_biorthogonal(coulomb(2, 1.0)), DegeneracyError);
}

TEST_CASE("is_positive") {
  const auto id = is_positive(MetricCandidate::external(CMatrix::Identity(3, 3)));
  CHECK(id.positive);
  CHECK(id.min_eigenvalue == doctest::Approx(1.0));

  const auto p = is_positive(n2_metric(1.0, 0.0, 0.5));
  CHECK(p.positive);
  CHECK(p.min_eigenvalue == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(p.max_eigenvalue == doctest::Approx(1.5).epsilon(1e-14));

  const auto q = is_positive(n2_metric(1.0, 1.0, 0.5));
  CHECK_FALSE(q.positive);
  CHECK(q.min_eigenvalue == doctest::Approx(1.0 - std::sqrt(1.25)).epsilon(1e-13));
}

TEST_CASE("N = 2 metric family") {
  CHECK(n2_metric(1.0, 0.0, 0.0).matrix() == CMatrix::Identity(2, 2));

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double k = dist(rng);
    const double m = dist(rng);
    const double a = dist(rng);
    const auto closed = n2_metric_eigenvalues(k, m, a);
    const RVector numeric = hermitian_eigenvalues(n2_metric(k, m, a).matrix());
    const double lo = std::min(closed[0], closed[1]);
    const double hi = std::max(closed[0], closed[1]);
    CHECK(std::abs(numeric(0) - lo) <= 1e-12 * std::max(1.0, std::abs(lo)));
    CHECK(std::abs(numeric(1) - hi) <= 1e-12 * std::max(1.0, std::abs(hi)));
  }

  // k -> 0, m -> infinity with k m = 1 approaches the parity matrix.
  const double k = 1e-9;
  const auto limit = n2_metric(k, 1.0 / k, 0.7);
  CHECK((limit.matrix() - parity(2).cast<Complex>()).cwiseAbs().maxCoeff() <= 1e-8);
}

TEST_CASE("property: scaling covariance of the N = 2 family") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  std::uniform_real_distribution<double> lambda_dist(0.01, 50.0);
  for (int trial = 0; trial < 30; ++trial) {
    const double k = dist(rng);
    const double m = dist(rng);
    const double a = dist(rng);
    const double lambda = lambda_dist(rng);
    const CMatrix scaled = n2_metric(lambda * k, m, a).matrix();
    CHECK((scaled - lambda * n2_metric(k, m, a).matrix()).cwiseAbs().maxCoeff() <=
          1e-14 * lambda * std::max(1.0, std::abs(k) * (1 + std::abs(m) + std::abs(a))));
    CHECK(is_positive(n2_metric(lambda * k, m, a)).positive ==
          is_positive(n2_metric(k, m, a)).positive);
  }
}

TEST_CASE("angle parametrization of the N = 2 family") {
  for (double gamma : {0.1, 1.0, 2.5}) {
    CHECK((n2_metric_angles(1.0, std::numbers::pi / 2, gamma).matrix() - CMatrix::Identity(2, 2))
              .cwiseAbs()
              .maxCoeff() <= 1e-16);
  }

  const double beta = 1.1;
  Eigen::Matrix2cd cpt_slice;
  cpt_slice << 1.0, -kI * std::cos(beta), kI * std::cos(beta), 1.0;
  CHECK((n2_metric_angles(1.0, beta, std::numbers::pi / 2).matrix() - CMatrix(cpt_slice))
            .cwiseAbs()
            .maxCoeff() <= 1e-16);

  const double b = std::numbers::pi / 3;
  const double g = std::numbers::pi / 4;
  const auto direct = n2_metric(2.0, std::cos(b) * std::cos(g), std::cos(b) * std::sin(g));
  CHECK((n2_metric_angles(2.0, b, g).matrix() - direct.matrix()).cwiseAbs().maxCoeff() <= 1e-15);

  CHECK_THROWS_AS(n2_metric_angles(0.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(n2_metric_angles(-1.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(n2_metric_angles(1.0, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(n2_metric_angles(1.0, 1.0, std::numbers::pi), DomainError);
}

TEST_CASE("CPT charge at N = 2") {
  const auto c0 = cpt_charge_n2(0.0);
  CHECK(c0.scale == 1.0);
  CHECK(CMatrix(c0.charge) == parity(2).cast<Complex>());

  const auto c6 = cpt_charge_n2(0.6);
  CHECK(c6.scale == doctest::Approx(1.25).epsilon(1e-15));

  for (double a : {0.0, 0.3, 0.6, 0.9, -0.45}) {
    const auto c = cpt_charge_n2(a);
    CHECK((c.charge * c.charge - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <= 1e-14);
    const auto theta = c.metric();
    CHECK(dieudonne_residual(coulomb(2, a), theta) <= 1e-14);
    CHECK(is_positive(theta).positive);
    // CP sits on the gamma = pi/2 slice with sin(beta) = 1/k.
    if (a > 0.0) {
      const double beta = std::asin(1.0 / c.scale);
      CHECK((theta.matrix() - n2_metric_angles(c.scale, beta, std::numbers::pi / 2).matrix())
                .cwiseAbs()
                .maxCoeff() <= 1e-14);
    }
  }
  CHECK_THROWS_AS(cpt_charge_n2(1.0), DomainError);
  CHECK_THROWS_AS(cpt_charge_n2(-1.5), DomainError);
}

TEST_CASE("N = 2 observables") {
  for (double a : {0.3, -0.7, 1.5}) {
    const auto h = n2_observable(2.0, 0.0, 0.0, -a, a);
    CHECK(CMatrix(h.matrix) == coulomb(2, a));
    CHECK(h.d_im == a);
  }
  const auto id = n2_observable(1.0, 0.0, 0.0, 0.0, 0.4);
  CHECK(CMatrix(id.matrix) == CMatrix::Identity(2, 2));

  // D = b = c = 0 with g = -sqrt(k^2 - 1) shares the charge's diagonal; the
  // off-diagonal comes out with the opposite sign, i.e. -C^dagger.
  for (double a : {0.2, 0.6}) {
    const auto c = cpt_charge_n2(a);
    const auto lambda = n2_observable(0.0, 0.0, 0.0, -std::sqrt(c.scale * c.scale - 1.0), a);
    CHECK((lambda.matrix.diagonal() - c.charge.diagonal()).cwiseAbs().maxCoeff() <= 1e-14);
    CHECK((lambda.matrix + c.charge.adjoint()).cwiseAbs().maxCoeff() <= 1e-14);
    CHECK(dieudonne_residual(CMatrix(lambda.matrix), c.metric()) <= 1e-14);
  }

  CHECK_THROWS_AS(n2_observable(1.0, 0.0, 0.0, 0.0, 0.0), DomainError);
}

TEST_CASE("property: N = 2 observables are quasi-Hermitian for their metric") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  std::uniform_real_distribution<double> k_dist(0.2, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    double a = dist(rng);
    if (std::abs(a) < 0.05) a = 0.05;
    const double m = dist(rng);
    const auto obs = n2_observable(dist(rng), dist(rng), dist(rng), dist(rng), a, m);
    const auto theta = n2_metric(k_dist(rng), m, a);
    CHECK(dieudonne_residual(CMatrix(obs.matrix), theta) <= 1e-12);
    CHECK(obs.d_im == -obs.g_im);
  }
}

TEST_CASE("N = 4 metric ansatz") {
  CHECK((n4_metric_ansatz(1, 0, 1, 0, 0.0, -1.0).matrix() - CMatrix::Identity(4, 4))
            .cwiseAbs()
            .maxCoeff() == 0.0);

  for (double a : {0.2, 0.3, 0.4}) {
    for (double z : {-1.0, -0.8}) {
      const auto theta = n4_metric_ansatz(1, 0, 1, 0, a, z);
      const RVector numeric = hermitian_eigenvalues(theta.matrix());
      const auto closed = n4_unit_metric_eigenvalues(a, z);
      for (int j = 0; j < 4; ++j) CHECK(std::abs(numeric(j) - closed[j]) <= 1e-10);
      CHECK(dieudonne_residual(coulomb(4, a, z), theta) <= 1e-12);
    }
  }

  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int trial = 0; trial < 30; ++trial) {
    const double a = dist(rng);
    const double z = 0.5 * dist(rng) - 0.5;
    const auto theta = n4_metric_ansatz(dist(rng), dist(rng), dist(rng), dist(rng), a, z);
    CHECK(dieudonne_residual(coulomb(4, a, z), theta) <= 1e-12);
    CHECK(hermiticity_error(theta.matrix()) <= 1e-14);
  }
}

TEST_CASE("band width") {
  CHECK(band_width(MetricCandidate::external(CMatrix::Identity(5, 5)), 1e-12) == 0);
  CHECK(band_width(n2_metric(1.0, 0.5, 0.5), 1e-12) == 1);
  CHECK(band_width(unit_biorthogonal(coulomb(6, 0.3)), 1e-12) == 5);

  CMatrix tri = CMatrix::Identity(4, 4);
  tri(0, 1) = tri(1, 0) = 0.2;
  tri(2, 3) = tri(3, 2) = 1e-14;
  const auto t = MetricCandidate::external(tri);
  CHECK(band_width(t, 1e-12) == 1);
  tri(0, 2) = tri(2, 0) = 1e-3;
  CHECK(band_width(MetricCandidate::external(tri), 1e-12) == 2);
  CHECK(band_width(MetricCandidate::external(tri), 1e-2) == 1);
}

TEST_CASE("Hermitian solution space of the Dieudonne map") {
  CHECK(dieudonne_solution_dimension(coulomb(2, 0.5)) == 2);
  CHECK(dieudonne_solution_dimension(coulomb(2, 0.0)) == 2);
  // Simple real spectrum: one real weight per eigenpair.
  CHECK(dieudonne_solution_dimension(coulomb(4, 0.3)) == 4);
  CHECK(dieudonne_solution_dimension(coulomb(6, 0.2, -0.7)) == 6);
  // Identity commutes with every Hermitian matrix.
  CHECK(dieudonne_solution_dimension(CMatrix::Identity(3, 3)) == 9);
}

TEST_CASE("inner product") {
  std::mt19937_64 rng(19);
  const auto id = MetricCandidate::external(CMatrix::Identity(4, 4));
  const CVector x = oracle::random_vector(rng, 4);
  const CVector y = oracle::random_vector(rng, 4);
  CHECK(std::abs(s_inner_product(x, y, id) - x.dot(y)) <= 1e-14);
  CHECK_THROWS_AS(s_inner_product(CVector(3), y, id), DomainError);

  const CMatrix h = coulomb(8, 0.25);
  const auto sys = eigensystem(h);
  const auto theta = metric_from_biorthogonal(sys, KappaWeights::ones(8));
  for (Eigen::Index m = 0; m < 8; ++m) {
    for (Eigen::Index n = 0; n < 8; ++n) {
      const Complex ip = s_inner_product(sys.right.col(m), sys.right.col(n), theta);
      CHECK(std::abs(ip - (m == n ? 1.0 : 0.0)) <= 1e-10);
    }
  }
  for (int trial = 0; trial < 10; ++trial) {
    const CVector u = oracle::random_vector(rng, 8);
    const CVector v = oracle::random_vector(rng, 8);
    CHECK(std::abs(s_inner_product(u, v, theta) - std::conj(s_inner_product(v, u, theta))) <=
          1e-12);
    const Complex norm = s_inner_product(u, u, theta);
    CHECK(std::abs(norm.imag()) <= 1e-12 * norm.real());
    CHECK(norm.real() > 0.0);
  }
}

TEST_CASE("property: metrics are Hermitian, solve the Dieudonne equation, make H self-adjoint") {
  std::mt19937_64 rng(23);
  for (int n : {2, 4, 6, 8, 14}) {
    const double alpha = critical_coupling(n, -1.0, 1e-8);
    for (double fraction : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      const CMatrix h = coulomb(n, fraction * alpha);
      const auto theta = unit_biorthogonal(h);
      CHECK(hermiticity_error(theta.matrix()) <= 1e-14);
      CHECK(dieudonne_residual(h, theta) <= 1e-10);
      CHECK(is_positive(theta).positive);
      for (int pair = 0; pair < 20; ++pair) {
        const CVector psi = oracle::random_vector(rng, n);
        const CVector phi = oracle::random_vector(rng, n);
        const Complex lhs = s_inner_product(psi, h * phi, theta);
        const Complex rhs = s_inner_product(h * psi, phi, theta);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(lhs)));
      }
    }
  }
}

TEST_CASE("property: biorthogonal metric degenerates toward the reality bound") {
  for (int n : {4, 6}) {
    const double alpha = critical_coupling(n, -1.0, 1e-12);
    auto conditioning = [&](double a) {
      const auto r = is_positive(unit_biorthogonal(coulomb(n, a)));
      CHECK(r.positive);
      return r.min_eigenvalue / r.max_eigenvalue;
    };
    const double far = conditioning(0.5 * alpha);
    const double mid = conditioning(alpha - 1e-3);
    const double near = conditioning(alpha - 1e-6);
    CHECK(mid < far);
    CHECK(near < mid);
    CHECK(near < 1e-2);
  }
}

TEST_CASE("provenance descriptions") {
  CHECK(describe(n2_metric(1, 0.5, 0.25).provenance()) == "n2_family(k=1,m=0.5,a=0.25)");
  CHECK(describe(cpt_charge_n2(0.5).metric().provenance()) == "cpt(a=0.5)");
  CHECK(describe(MetricCandidate::external(CMatrix::Identity(1, 1)).provenance()) == "external");
  CHECK(describe(n4_metric_ansatz(1, 0, 1, 0, 0.2, -1).provenance()) ==
        "n4_ansatz(k=1,m=0,r=1,eta=0,a=0.2,z=-1)");
}
