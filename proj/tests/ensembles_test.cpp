#include "projsum/ensembles.hpp"

#include <cmath>
#include <doctest.h>
#include <numeric>

#include "projsum/stats.hpp"

using namespace projsum;

TEST_CASE("EnsembleParams validation and rank swap") {
  CHECK_THROWS_AS(EnsembleParams(8, 0, 4), std::invalid_argument);
  CHECK_THROWS_AS(EnsembleParams(8, 2, 9), std::invalid_argument);
  CHECK_THROWS_AS(EnsembleParams(8, 2, 3, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(EnsembleParams(8, 2, 3, 1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(EnsembleParams(8, 5, 6), std::invalid_argument);  // p + q > N
  CHECK_NOTHROW(EnsembleParams(8, 5, 6, 1.0, 2, true));

  const EnsembleParams swapped(16, 9, 4);
  CHECK(swapped.p_rank == 4);
  CHECK(swapped.q_rank == 9);
  CHECK(swapped.ranks_swapped);
  CHECK(swapped.atom_theta_count() == 5);
  CHECK(swapped.atom_zero_count() == 3);
}

TEST_CASE("gaussian span projection: N=1 gives the identity") {
  for (int beta : {1, 2}) {
    const SquareMatrix p = sample_gaussian_span_projection(1, 1, beta, SeedSpec{5, 0});
    CHECK(p.trace() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p.idempotency_defect() <= 1e-14);
  }
}

TEST_CASE("gaussian span projection: trace and idempotency") {
  const SquareMatrix p = sample_gaussian_span_projection(8, 3, 2, SeedSpec{7, 1});
  CHECK(std::abs(p.trace() - 3.0) <= 1e-10);
  CHECK(p.idempotency_defect() <= 1e-12);

  const SquareMatrix pr = sample_gaussian_span_projection(40, 11, 1, SeedSpec{7, 2});
  CHECK(std::abs(pr.trace() - 11.0) <= 1e-10);
  CHECK(pr.idempotency_defect() <= 1e-12);
}

TEST_CASE("gaussian span projection eigenvalues are 0 and 1") {
  const SquareMatrix p = sample_gaussian_span_projection(64, 16, 1, SeedSpec{11, 0});
  const auto eigs = self_adjoint_eigenvalues(p);
  int ones = 0, zeros = 0;
  for (double v : eigs) {
    if (std::abs(v - 1.0) <= 1e-9) ++ones;
    if (std::abs(v) <= 1e-9) ++zeros;
  }
  CHECK(ones == 16);
  CHECK(zeros == 48);
}

TEST_CASE("sampling is deterministic per seed") {
  for (int beta : {1, 2}) {
    const EnsembleParams params(24, 6, 9, 1.5, beta);
    const auto a = sample_jacobi_spectrum(params, SeedSpec{42, 3});
    const auto b = sample_jacobi_spectrum(params, SeedSpec{42, 3});
    CHECK(a == b);
    const auto c = sample_jacobi_spectrum(params, SeedSpec{42, 4});
    CHECK(a != c);

    const auto m1 = sample_sum_matrix(params, SeedSpec{42, 3});
    const auto m2 = sample_sum_matrix(params, SeedSpec{42, 3});
    if (beta == 1)
      CHECK(m1.real_entries() == m2.real_entries());
    else
      CHECK(m1.complex_entries() == m2.complex_entries());
  }
}

TEST_CASE("sum matrix: N=2, p=q=1, theta=1 pairs around 1") {
  const EnsembleParams params(2, 1, 1);
  const auto eigs = self_adjoint_eigenvalues(sample_sum_matrix(params, SeedSpec{3, 0}));
  REQUIRE(eigs.size() == 2);
  CHECK(eigs[0] + eigs[1] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(eigs[0] >= -1e-12);
  CHECK(eigs[1] <= 2.0 + 1e-12);
}

TEST_CASE("sum matrix atom multiplicities (64, 16, 24)") {
  const EnsembleParams params(64, 16, 24);
  const auto eigs = self_adjoint_eigenvalues(sample_sum_matrix(params, SeedSpec{9, 0}));
  int at_theta = 0, at_zero = 0;
  for (double v : eigs) {
    if (std::abs(v - 1.0) <= 1e-8) ++at_theta;
    if (std::abs(v) <= 1e-8) ++at_zero;
  }
  CHECK(at_theta == 8);
  CHECK(at_zero == 24);
}

TEST_CASE("sum matrix with theta=2: atoms and continuous range") {
  const EnsembleParams params(32, 8, 8, 2.0);
  const auto eigs = self_adjoint_eigenvalues(sample_sum_matrix(params, SeedSpec{123, 0}));
  int at_zero = 0, at_theta = 0, interior = 0;
  for (double v : eigs) {
    if (std::abs(v) <= 1e-8)
      ++at_zero;
    else if (std::abs(v - 2.0) <= 1e-8)
      ++at_theta;
    else if (v > 0.0 && v < 3.0)
      ++interior;
  }
  CHECK(at_zero == 16);
  CHECK(at_theta == 0);
  CHECK(interior == 16);
}

TEST_CASE("jacobi spectrum lies in (0,1) with p points") {
  const EnsembleParams params(16, 4, 8);
  const auto points = sample_jacobi_spectrum(params, SeedSpec{21, 0});
  REQUIRE(points.size() == 4);
  for (double t : points) {
    CHECK(t > 0.0);
    CHECK(t < 1.0);
  }
  CHECK(std::is_sorted(points.begin(), points.end()));
}

TEST_CASE("jacobi spectrum matches a general eigensolve of M") {
  // Independent route: form M = (A'A + B'B)^{-1} A'A from the same Gram
  // pair and diagonalize it as a plain (non-selfadjoint) matrix.
  const EnsembleParams params(64, 16, 16, 1.0, 2);
  const SeedSpec seed{77, 5};
  const auto grams = sample_jacobi_grams(params, seed);
  const auto points = sample_jacobi_spectrum(params, seed);

  const Eigen::MatrixXcd m =
      grams.gram.complex_entries().inverse() * grams.numerator.complex_entries();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m);
  std::vector<double> want(16);
  for (int i = 0; i < 16; ++i) want[i] = solver.eigenvalues()[i].real();
  std::sort(want.begin(), want.end());

  REQUIRE(points.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i)
    CHECK(std::abs(points[i] - want[i]) <= 1e-10);
}

TEST_CASE("jacobi single point is uniform for N=2, p=q=1, beta=2") {
  // The joint density with p = 1 and a = b = 0 reduces to the uniform
  // density on (0,1).
  const EnsembleParams params(2, 1, 1, 1.0, 2);
  std::vector<double> samples(10000);
  for (std::size_t r = 0; r < samples.size(); ++r)
    samples[r] = sample_jacobi_spectrum(params, SeedSpec{2024, r})[0];
  const double ks = ks_distance(
      samples, [](double x) { return x <= 0.0 ? 0.0 : (x >= 1.0 ? 1.0 : x); });
  CHECK(ks <= 0.02);
}

TEST_CASE("invariance: diagonal Q vs random-span Q leave trace(PQ) alike") {
  const EnsembleParams params(48, 12, 18);
  const int seeds = 2000;
  std::vector<double> diag_stat(seeds), random_stat(seeds);
  for (int r = 0; r < seeds; ++r) {
    const auto md = sample_sum_matrix(params, SeedSpec{31, static_cast<unsigned>(r)},
                                      QRealization::diagonal);
    const auto mr = sample_sum_matrix(params, SeedSpec{32, static_cast<unsigned>(r)},
                                      QRealization::random_span);
    // trace(PQ) = (trace((P+Q)^2) - p - q) / 2 for projections P, Q.
    const auto& d = md.complex_entries();
    const auto& g = mr.complex_entries();
    diag_stat[r] = 0.5 * ((d * d).trace().real() - 12 - 18);
    random_stat[r] = 0.5 * ((g * g).trace().real() - 12 - 18);
  }
  CHECK(ks_distance_two_sample(diag_stat, random_stat) <= 0.05);
}

TEST_CASE("self_adjoint_eigenvalues on fixed matrices") {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(3, 3);
  d(0, 0) = 3.0;
  d(1, 1) = 1.0;
  d(2, 2) = 2.0;
  const auto diag_eigs = self_adjoint_eigenvalues(SquareMatrix::from_real(d));
  CHECK(diag_eigs == std::vector<double>{1.0, 2.0, 3.0});

  Eigen::MatrixXd flip(2, 2);
  flip << 0.0, 1.0, 1.0, 0.0;
  const auto flip_eigs = self_adjoint_eigenvalues(SquareMatrix::from_real(flip));
  CHECK(flip_eigs[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(flip_eigs[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("self_adjoint_eigenvalues: trace identity and residual") {
  RngStream rng(SeedSpec{55, 0});
  Eigen::MatrixXcd m(10, 10);
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) m(i, j) = rng.complex_gaussian();
  const SquareMatrix sym = SquareMatrix::from_complex(m);
  const auto eigs = self_adjoint_eigenvalues(sym);
  const double sum = std::accumulate(eigs.begin(), eigs.end(), 0.0);
  CHECK(sum == doctest::Approx(sym.trace()).epsilon(1e-12));
  CHECK(self_adjoint_eigen_residual(sym) <= 1e-8);
}

TEST_CASE("self_adjoint_eigenvalues rejects non-finite entries") {
  Eigen::MatrixXd bad = Eigen::MatrixXd::Zero(2, 2);
  bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(self_adjoint_eigenvalues(SquareMatrix::from_real(bad)),
                  std::invalid_argument);
}

TEST_CASE("SquareMatrix is exactly self-adjoint by construction") {
  RngStream rng(SeedSpec{66, 0});
  Eigen::MatrixXcd m(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) m(i, j) = rng.complex_gaussian();
  const auto sym = SquareMatrix::from_complex(m).complex_entries();
  for (int i = 0; i < 6; ++i) {
    CHECK(sym(i, i).imag() == 0.0);
    for (int j = 0; j < 6; ++j) CHECK(sym(i, j) == std::conj(sym(j, i)));
  }
}
