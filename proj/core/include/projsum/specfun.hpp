#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace projsum {

/// Order of a Bessel function of the first kind. Any finite real order
/// >= -1 is accepted, plus all negative integers (evaluated through the
/// reflection J_{-m} = (-1)^m J_m). Non-integer orders below -1 are
/// rejected at construction.
class BesselOrder {
 public:
  explicit BesselOrder(double nu);
  double value() const { return nu_; }

 private:
  double nu_;
};

/// Point count and weight exponents of the weight x^a (1-x)^b on [0, 1].
/// The weight must be integrable: a > -1 and b > -1.
struct JacobiParams {
  int n;
  double a_exp;
  double b_exp;
  JacobiParams(int n_, double a_exp_, double b_exp_);
};

/// Three-term recurrence data for the orthonormal polynomials Q_k of a
/// Jacobi weight:  x Q_k = offdiag[k] Q_{k+1} + diag[k] Q_k + offdiag[k-1] Q_{k-1},
/// with Q_0 = 1 / norm0 and norm0 the L2 norm of the constant 1.
struct RecurrenceTable {
  std::vector<double> diag;     // n entries
  std::vector<double> offdiag;  // n-1 entries, strictly positive
  double norm0;

  /// Writes Q_0(x) .. Q_{m-1}(x) into out (m = out.size() <= diag.size()).
  void eval(double x, std::span<double> out) const;
};

/// Gamma function, poles rejected. Relative error <= 1e-12 on [0.5, 50].
double gamma_fn(double x);

/// Bessel function of the first kind J_nu(x) for x >= 0. Absolute error
/// <= 1e-10 for x in [0, 50] and nu in [-1, 20]. Power series below
/// x = 12, normalized downward recurrence above. At x = 0 the limit value
/// is returned (this is +infinity for non-integer nu < 0).
double bessel_j(BesselOrder order, double x);

/// Recurrence coefficients of the orthonormal polynomials for the weight
/// x^a (1-x)^b on [0, 1], stable to n of several hundred.
RecurrenceTable jacobi_recurrence(const JacobiParams& params);

/// Christoffel-Darboux kernel with weight factors included,
///   K_n(x, y) = sqrt(w(x) w(y)) * sum_{k<n} Q_k(x) Q_k(y),
/// so that the diagonal integrates to n over [0, 1]. Symmetric in (x, y).
double cd_kernel(const JacobiParams& params, double x, double y);
double cd_kernel(const RecurrenceTable& table, const JacobiParams& params, double x, double y);

/// Diagonal of the hard-edge Bessel kernel,
///   (1/2) (J_a(t)^2 - J_{a+1}(t) J_{a-1}(t)),
/// nonnegative for integer a >= 0 (J_{-1} = -J_1 makes the a = 0 case
/// manifestly a sum of squares).
double bessel_kernel_diag_complex(int a, double t);

/// Limiting expected eigenvalue count of P + Q (complex Hermitian case)
/// in [1, 1 + t/(sqrt(2) p)] with q - p = a held fixed:
///   integral_0^{sqrt(2) t} (s/2) (J_a(s)^2 - J_{a+1}(s) J_{a-1}(s)) ds.
/// Grows like t^2/2 at a = 0. Absolute quadrature error <= 1e-9;
/// nondecreasing in t. Validated against the exact finite-n
/// Christoffel-Darboux counting integral and direct Monte Carlo.
double hard_edge_count_complex(int a, double t);

/// Real symmetric counterpart: the complex counting integral plus a
/// boundary term,
///   hard_edge_count_complex(a, t)
/// + (1/2) integral_0^{sqrt(2) t} J_a(s) (1 - integral_0^s J_a(u) du) ds,
/// which grows like t^{a+1} / (2^{(a+1)/2} (a+1)!) for small t (linear at
/// a = 0: the real ensemble has no mirror repulsion at the symmetry
/// point). Absolute error <= 1e-8; nonnegative and nondecreasing.
/// Calibrated by Monte Carlo at a = 0, 1, 2.
double hard_edge_count_real(int a, double t);

/// Embedded Tracy-Widom reference: quantile table plus mean and variance,
/// computed offline by Nystrom/Gauss-Legendre evaluation of the Airy-kernel
/// Fredholm determinants and cross-checked against published moments.
struct TwReference {
  int beta;
  double mean;
  double variance;
  /// (probability, quantile) pairs, increasing in probability.
  std::vector<std::pair<double, double>> quantiles;

  /// CDF by monotone linear interpolation of the quantile table, clamped
  /// to the outermost tabulated probabilities beyond its range.
  double cdf(double x) const;
};

/// Reference table for F_beta, beta in {1, 2}.
const TwReference& tw_reference(int beta);

}  // namespace projsum
