#include "projsum/ensembles.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace projsum {

EnsembleParams::EnsembleParams(int dimension_, int p_rank_, int q_rank_, double theta_, int beta_,
                               bool allow_rank_overflow_)
    : dimension(dimension_),
      p_rank(p_rank_),
      q_rank(q_rank_),
      theta(theta_),
      beta(beta_),
      allow_rank_overflow(allow_rank_overflow_) {
  if (dimension < 1) throw std::invalid_argument("EnsembleParams: dimension must be positive");
  if (p_rank < 1 || p_rank > dimension || q_rank < 1 || q_rank > dimension)
    throw std::invalid_argument("EnsembleParams: ranks must lie in [1, N]");
  if (p_rank > q_rank) {
    std::swap(p_rank, q_rank);
    ranks_swapped = true;
  }
  if (p_rank + q_rank > dimension && !allow_rank_overflow)
    throw std::invalid_argument(
        "EnsembleParams: p + q > N requires allow_rank_overflow (eigenvalue-2 atoms appear)");
  if (theta == 0.0 || !std::isfinite(theta))
    throw std::invalid_argument("EnsembleParams: theta must be nonzero and finite");
  if (beta != 1 && beta != 2) throw std::invalid_argument("EnsembleParams: beta must be 1 or 2");
}

SquareMatrix SquareMatrix::from_real(Eigen::MatrixXd m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("SquareMatrix: matrix must be square");
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
      const double v = 0.5 * (m(i, j) + m(j, i));
      m(i, j) = v;
      m(j, i) = v;
    }
  return SquareMatrix(std::variant<Eigen::MatrixXd, Eigen::MatrixXcd>(std::move(m)));
}

SquareMatrix SquareMatrix::from_complex(Eigen::MatrixXcd m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("SquareMatrix: matrix must be square");
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    m(i, i) = std::complex<double>(m(i, i).real(), 0.0);
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
      const std::complex<double> v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      m(i, j) = v;
      m(j, i) = std::conj(v);
    }
  }
  return SquareMatrix(std::variant<Eigen::MatrixXd, Eigen::MatrixXcd>(std::move(m)));
}

int SquareMatrix::dimension() const {
  return std::visit([](const auto& m) { return static_cast<int>(m.rows()); }, entries_);
}

double SquareMatrix::trace() const {
  return std::visit([](const auto& m) { return std::real(m.trace()); }, entries_);
}

const Eigen::MatrixXd& SquareMatrix::real_entries() const {
  if (field_beta() != 1) throw std::logic_error("SquareMatrix: not a real matrix");
  return std::get<Eigen::MatrixXd>(entries_);
}

const Eigen::MatrixXcd& SquareMatrix::complex_entries() const {
  if (field_beta() != 2) throw std::logic_error("SquareMatrix: not a complex matrix");
  return std::get<Eigen::MatrixXcd>(entries_);
}

double SquareMatrix::idempotency_defect() const {
  return std::visit(
      [](const auto& m) { return ((m * m - m).cwiseAbs()).maxCoeff(); }, entries_);
}

namespace {

Eigen::MatrixXd gaussian_real(int rows, int cols, RngStream& rng) {
  Eigen::MatrixXd m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = rng.gaussian();
  return m;
}

Eigen::MatrixXcd gaussian_complex(int rows, int cols, RngStream& rng) {
  Eigen::MatrixXcd m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = rng.complex_gaussian();
  return m;
}

// Thin Q factor of the QR decomposition, rejecting rank-deficient input.
template <class Matrix>
bool thin_q(const Matrix& x, Matrix& q_out) {
  Eigen::HouseholderQR<Matrix> qr(x);
  const auto rdiag = qr.matrixQR().diagonal().cwiseAbs();
  const double scale = rdiag.maxCoeff();
  if (!(scale > 0.0) || rdiag.minCoeff() <= scale * x.rows() * 1e-14) return false;
  q_out = qr.householderQ() * Matrix::Identity(x.rows(), x.cols());
  return true;
}

template <class Matrix>
Matrix sample_span_q(int dimension, int rank, int beta, const SeedSpec& seed,
                     StreamPurpose purpose) {
  const auto draw = [&](std::uint64_t salt) {
    RngStream rng(seed, salt);
    if constexpr (std::is_same_v<Matrix, Eigen::MatrixXd>)
      return gaussian_real(dimension, rank, rng);
    else
      return gaussian_complex(dimension, rank, rng);
  };
  (void)beta;
  Matrix q;
  if (thin_q(draw(static_cast<std::uint64_t>(purpose)), q)) return q;
  // Degenerate Gaussian draw: resample once, then give up.
  if (thin_q(draw(static_cast<std::uint64_t>(purpose) +
                  static_cast<std::uint64_t>(StreamPurpose::resample)),
             q))
    return q;
  throw std::runtime_error("sample_gaussian_span_projection: rank-deficient draw twice");
}

}  // namespace

SquareMatrix sample_gaussian_span_projection(int dimension, int rank, int beta,
                                             const SeedSpec& seed) {
  if (rank < 1 || rank > dimension)
    throw std::invalid_argument("sample_gaussian_span_projection: rank out of range");
  if (beta == 1) {
    const Eigen::MatrixXd y =
        sample_span_q<Eigen::MatrixXd>(dimension, rank, beta, seed, StreamPurpose::primary);
    return SquareMatrix::from_real(y * y.transpose());
  }
  if (beta == 2) {
    const Eigen::MatrixXcd y =
        sample_span_q<Eigen::MatrixXcd>(dimension, rank, beta, seed, StreamPurpose::primary);
    return SquareMatrix::from_complex(y * y.adjoint());
  }
  throw std::invalid_argument("sample_gaussian_span_projection: beta must be 1 or 2");
}

SquareMatrix sample_sum_matrix(const EnsembleParams& params, const SeedSpec& seed,
                               QRealization q_mode) {
  const int n = params.dimension;
  if (params.beta == 1) {
    Eigen::MatrixXd sum = sample_gaussian_span_projection(n, params.p_rank, 1, seed).real_entries();
    if (q_mode == QRealization::diagonal) {
      for (int i = 0; i < params.q_rank; ++i) sum(i, i) += params.theta;
    } else {
      const Eigen::MatrixXd y = sample_span_q<Eigen::MatrixXd>(n, params.q_rank, 1, seed,
                                                               StreamPurpose::second_projection);
      sum += params.theta * (y * y.transpose());
    }
    return SquareMatrix::from_real(std::move(sum));
  }
  Eigen::MatrixXcd sum = sample_gaussian_span_projection(n, params.p_rank, 2, seed).complex_entries();
  if (q_mode == QRealization::diagonal) {
    for (int i = 0; i < params.q_rank; ++i) sum(i, i) += params.theta;
  } else {
    const Eigen::MatrixXcd y = sample_span_q<Eigen::MatrixXcd>(n, params.q_rank, 2, seed,
                                                               StreamPurpose::second_projection);
    sum += params.theta * (y * y.adjoint());
  }
  return SquareMatrix::from_complex(std::move(sum));
}

namespace {

JacobiGramPair sample_jacobi_grams_salted(const EnsembleParams& params, const SeedSpec& seed,
                                          std::uint64_t salt) {
  if (params.p_rank + params.q_rank > params.dimension)
    throw std::invalid_argument("sample_jacobi_grams: requires p + q <= N");
  const int n = params.dimension, p = params.p_rank, q = params.q_rank;
  RngStream rng(seed, salt);
  if (params.beta == 1) {
    const Eigen::MatrixXd x = gaussian_real(n, p, rng);
    const auto a = x.topRows(q);
    Eigen::MatrixXd num = a.transpose() * a;
    Eigen::MatrixXd gram = x.transpose() * x;
    return {SquareMatrix::from_real(std::move(num)), SquareMatrix::from_real(std::move(gram))};
  }
  const Eigen::MatrixXcd x = gaussian_complex(n, p, rng);
  const auto a = x.topRows(q);
  Eigen::MatrixXcd num = a.adjoint() * a;
  Eigen::MatrixXcd gram = x.adjoint() * x;
  return {SquareMatrix::from_complex(std::move(num)), SquareMatrix::from_complex(std::move(gram))};
}

}  // namespace

JacobiGramPair sample_jacobi_grams(const EnsembleParams& params, const SeedSpec& seed) {
  return sample_jacobi_grams_salted(params, seed,
                                    static_cast<std::uint64_t>(StreamPurpose::primary));
}

namespace {

template <class Matrix>
std::vector<double> generalized_eigenvalues(const Matrix& num, const Matrix& gram) {
  Eigen::GeneralizedSelfAdjointEigenSolver<Matrix> solver(num, gram,
                                                          Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
  if (solver.info() != Eigen::Success) return {};
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

}  // namespace

std::vector<double> sample_jacobi_spectrum(const EnsembleParams& params, const SeedSpec& seed) {
  auto grams = sample_jacobi_grams(params, seed);
  std::vector<double> values =
      params.beta == 1
          ? generalized_eigenvalues(grams.numerator.real_entries(), grams.gram.real_entries())
          : generalized_eigenvalues(grams.numerator.complex_entries(), grams.gram.complex_entries());
  if (values.empty()) {
    // Singular Gram matrix (measure zero): resample once, then give up.
    auto grams2 = sample_jacobi_grams_salted(
        params, seed, static_cast<std::uint64_t>(StreamPurpose::resample));
    values = params.beta == 1
                 ? generalized_eigenvalues(grams2.numerator.real_entries(), grams2.gram.real_entries())
                 : generalized_eigenvalues(grams2.numerator.complex_entries(),
                                           grams2.gram.complex_entries());
    if (values.empty())
      throw std::runtime_error("sample_jacobi_spectrum: singular Gram matrix twice");
  }
  return values;
}

namespace {

template <class Matrix>
void check_finite(const Matrix& m) {
  if (!m.allFinite())
    throw std::invalid_argument("self_adjoint_eigenvalues: non-finite entries");
}

}  // namespace

std::vector<double> self_adjoint_eigenvalues(const SquareMatrix& m) {
  if (m.field_beta() == 1) {
    check_finite(m.real_entries());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.real_entries(),
                                                          Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
  }
  check_finite(m.complex_entries());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m.complex_entries(),
                                                         Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

namespace {

template <class Matrix>
double eigen_residual(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();
  const double norm = std::max(m.operatorNorm(), 1e-300);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const double r = (m * vectors.col(i) - values[i] * vectors.col(i)).norm();
    worst = std::max(worst, r);
  }
  return worst / norm;
}

}  // namespace

double self_adjoint_eigen_residual(const SquareMatrix& m) {
  return m.field_beta() == 1 ? eigen_residual(m.real_entries())
                             : eigen_residual(m.complex_entries());
}

}  // namespace projsum
