#pragma once

#include <Eigen/Dense>
#include <variant>
#include <vector>

#include "projsum/rng.hpp"

namespace projsum {

/// Parameters of the two-projection ensemble P + theta * Q: ambient
/// dimension N, projection ranks p <= q (constructor swaps and flags if
/// given p > q), coupling theta != 0, and field index beta (1 = real
/// symmetric, 2 = complex Hermitian). p + q <= N is required unless
/// allow_rank_overflow is set.
struct EnsembleParams {
  int dimension;
  int p_rank;
  int q_rank;
  double theta;
  int beta;
  bool ranks_swapped = false;
  bool allow_rank_overflow = false;

  EnsembleParams(int dimension, int p_rank, int q_rank, double theta = 1.0, int beta = 2,
                 bool allow_rank_overflow = false);

  int atom_theta_count() const { return q_rank - p_rank; }
  int atom_zero_count() const { return dimension - p_rank - q_rank; }
  double p_fraction() const { return static_cast<double>(p_rank) / dimension; }
  double q_fraction() const { return static_cast<double>(q_rank) / dimension; }
};

/// Dense self-adjoint matrix over the field selected by beta. Entries
/// satisfy entry(i, j) == conj(entry(j, i)) exactly: the factory functions
/// fold each off-diagonal pair to a single stored value and zero the
/// imaginary part of the diagonal.
class SquareMatrix {
 public:
  static SquareMatrix from_real(Eigen::MatrixXd m);
  static SquareMatrix from_complex(Eigen::MatrixXcd m);

  int dimension() const;
  int field_beta() const { return std::holds_alternative<Eigen::MatrixXd>(entries_) ? 1 : 2; }
  double trace() const;

  const Eigen::MatrixXd& real_entries() const;
  const Eigen::MatrixXcd& complex_entries() const;

  /// max_ij |(M^2 - M)_ij|, the idempotency defect used by projection tests.
  double idempotency_defect() const;

 private:
  explicit SquareMatrix(std::variant<Eigen::MatrixXd, Eigen::MatrixXcd> entries)
      : entries_(std::move(entries)) {}
  std::variant<Eigen::MatrixXd, Eigen::MatrixXcd> entries_;
};

/// Whether sample_sum_matrix realizes Q as the fixed diagonal projection
/// (exact in distribution by unitary invariance, and cheaper) or as a
/// second independent Gaussian-span projection.
enum class QRealization { diagonal, random_span };

/// Haar-invariant random projection of the given rank: P = Y Y' with Y the
/// QR orthonormalization of an N x rank standard Gaussian matrix. A
/// rank-deficient draw (measure zero) is resampled once, then rejected.
SquareMatrix sample_gaussian_span_projection(int dimension, int rank, int beta,
                                             const SeedSpec& seed);

/// P + theta * Q with independent Haar-invariant projections of ranks
/// p_rank and q_rank.
SquareMatrix sample_sum_matrix(const EnsembleParams& params, const SeedSpec& seed,
                               QRealization q_mode = QRealization::diagonal);

/// The Gram pair (A'A, A'A + B'B) of the top q x p and bottom (N-q) x p
/// blocks of an N x p Gaussian matrix; the generalized eigenvalues of the
/// pair are the Jacobi points of sample_jacobi_spectrum for the same seed.
struct JacobiGramPair {
  SquareMatrix numerator;  // A'A
  SquareMatrix gram;       // A'A + B'B
};
JacobiGramPair sample_jacobi_grams(const EnsembleParams& params, const SeedSpec& seed);

/// Ascending eigenvalues of M = (A'A + B'B)^{-1} A'A, the Jacobi-ensemble
/// points in (0, 1) with exponents (q-p, N-p-q) for beta = 2 and
/// ((q-p-1)/2, (N-p-q-1)/2) for beta = 1. Requires p + q <= N.
std::vector<double> sample_jacobi_spectrum(const EnsembleParams& params, const SeedSpec& seed);

/// All eigenvalues of a self-adjoint matrix, ascending, with multiplicity.
std::vector<double> self_adjoint_eigenvalues(const SquareMatrix& m);

/// max_i ||M v_i - lambda_i v_i|| / ||M||, recomputed with eigenvectors;
/// diagnostic used by the backward-stability tests.
double self_adjoint_eigen_residual(const SquareMatrix& m);

}  // namespace projsum
