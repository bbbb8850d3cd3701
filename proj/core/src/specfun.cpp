#include "projsum/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "projsum/quadrature.hpp"

namespace projsum {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_integer(double x) { return x == std::floor(x); }

// Lanczos approximation, g = 7, 9 coefficients (Godfrey's set); relative
// error below 1e-13 on the positive real axis.
double lanczos_gamma(double z) {
  static constexpr double g = 7.0;
  static constexpr double c[9] = {
      0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,    12.507343278686905,
      -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};
  double acc = c[0];
  for (int i = 1; i < 9; ++i) acc += c[i] / (z - 1.0 + i);
  const double t = z + g - 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z - 0.5) * std::exp(-t) * acc;
}

}  // namespace

double gamma_fn(double x) {
  if (!std::isfinite(x)) throw std::domain_error("gamma_fn: non-finite argument");
  if (x <= 0.0 && is_integer(x))
    throw std::domain_error("gamma_fn: pole at non-positive integer");
  if (x >= 0.5) return lanczos_gamma(x);
  // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
  return kPi / (std::sin(kPi * x) * lanczos_gamma(1.0 - x));
}

BesselOrder::BesselOrder(double nu) : nu_(nu) {
  if (!std::isfinite(nu)) throw std::invalid_argument("BesselOrder: order must be finite");
  if (nu < -1.0 && !is_integer(nu))
    throw std::invalid_argument("BesselOrder: non-integer order below -1 is not supported");
}

namespace {

// Power series for J_nu, nu > -1. Adequate for x <= 12; term count
// bounded by 60.
double bessel_series(double nu, double x) {
  const double half = 0.5 * x;
  double term = std::pow(half, nu) / gamma_fn(nu + 1.0);
  double sum = term;
  const double h2 = half * half;
  for (int m = 1; m <= 60; ++m) {
    term *= -h2 / (m * (m + nu));
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum) + 1e-300) break;
  }
  return sum;
}

// Normalized downward (Miller) recurrence for J_nu, nu >= 0, using the
// Neumann-series normalization
//   (x/2)^f = sum_j (f + 2j) Gamma(f + j) / j!  J_{f+2j}(x),  f = frac(nu),
// which reduces to J_0 + 2 sum J_{2k} = 1 for integer nu.
double bessel_miller(double nu, double x) {
  const int n0 = static_cast<int>(std::floor(nu));
  const double frac = nu - n0;
  const int start = static_cast<int>(std::ceil(std::max(nu, x))) + 52;

  double fkp1 = 0.0;
  double fk = 1e-30;
  double target = 0.0;
  double norm = 0.0;
  // Normalization coefficients are accumulated on the way down; c_j for
  // even offsets 2j only. Walk k = start .. 0 where the order is frac + k.
  std::vector<double> f(start + 1);
  f[start] = fk;
  for (int k = start; k >= 1; --k) {
    const double fkm1 = (2.0 * (frac + k) / x) * fk - fkp1;
    fkp1 = fk;
    fk = fkm1;
    f[k - 1] = fk;
    if (std::abs(fk) > 1e280) {
      for (int j = k - 1; j <= start; ++j) f[j] *= 1e-280;
      fk *= 1e-280;
      fkp1 *= 1e-280;
    }
  }
  if (frac == 0.0) {
    norm = f[0];
    for (int j = 1; 2 * j <= start; ++j) norm += 2.0 * f[2 * j];
    target = f[n0] / norm;  // (x/2)^0 = 1
  } else {
    double coef = gamma_fn(frac + 1.0);  // j = 0: (f) Gamma(f) / 0!
    norm = coef * f[0];
    for (int j = 1; 2 * j <= start; ++j) {
      coef *= (frac + 2.0 * j) / (frac + 2.0 * (j - 1)) * (frac + j - 1.0) / j;
      norm += coef * f[2 * j];
    }
    target = f[n0] * std::pow(0.5 * x, frac) / norm;
  }
  return target;
}

double bessel_eval(double nu, double x) {
  if (x == 0.0) {
    if (nu == 0.0) return 1.0;
    if (nu > 0.0) return 0.0;
    return std::numeric_limits<double>::infinity();  // limit for nu in (-1, 0)
  }
  if (x <= 12.0) return bessel_series(nu, x);
  if (nu >= 0.0) return bessel_miller(nu, x);
  // nu in [-1, 0): one stable downward step from orders nu+1, nu+2.
  const double j1 = bessel_miller(nu + 1.0, x);
  const double j2 = bessel_miller(nu + 2.0, x);
  return (2.0 * (nu + 1.0) / x) * j1 - j2;
}

}  // namespace

double bessel_j(BesselOrder order, double x) {
  if (x < 0.0) throw std::domain_error("bessel_j: requires x >= 0");
  const double nu = order.value();
  if (nu < 0.0 && is_integer(nu)) {
    // Negative integer order: J_{-m} = (-1)^m J_m.
    const int m = static_cast<int>(-nu);
    const double v = bessel_eval(static_cast<double>(m), x);
    return (m % 2 == 0) ? v : -v;
  }
  return bessel_eval(nu, x);
}

JacobiParams::JacobiParams(int n_, double a_exp_, double b_exp_)
    : n(n_), a_exp(a_exp_), b_exp(b_exp_) {
  if (n < 1) throw std::invalid_argument("JacobiParams: n must be positive");
  if (!(a_exp > -1.0) || !(b_exp > -1.0))
    throw std::invalid_argument("JacobiParams: weight requires a > -1 and b > -1");
}

RecurrenceTable jacobi_recurrence(const JacobiParams& params) {
  // Coefficients of the classical Jacobi weight (1-u)^al (1+u)^be on
  // [-1, 1] with al = b_exp, be = a_exp, mapped to [0, 1] via x = (1+u)/2;
  // monic offdiagonals shrink by 4, diagonals by (1 + a)/2.
  const double al = params.b_exp;
  const double be = params.a_exp;
  const int n = params.n;

  RecurrenceTable table;
  table.diag.resize(n);
  table.offdiag.resize(n - 1);

  const double s = al + be;
  table.diag[0] = 0.5 * (1.0 + (be - al) / (s + 2.0));
  for (int k = 1; k < n; ++k) {
    const double d = (2.0 * k + s) * (2.0 * k + s + 2.0);
    table.diag[k] = 0.5 * (1.0 + (be * be - al * al) / d);
  }
  if (n > 1) {
    const double b1 = 4.0 * (al + 1.0) * (be + 1.0) / ((s + 2.0) * (s + 2.0) * (s + 3.0));
    table.offdiag[0] = 0.5 * std::sqrt(b1);
  }
  for (int k = 2; k < n; ++k) {
    const double den = (2.0 * k + s) * (2.0 * k + s) * (2.0 * k + s + 1.0) * (2.0 * k + s - 1.0);
    const double bk = 4.0 * k * (k + al) * (k + be) * (k + s) / den;
    table.offdiag[k - 1] = 0.5 * std::sqrt(bk);
  }
  // norm0^2 = Beta(a+1, b+1), the weight's total mass.
  table.norm0 = std::sqrt(gamma_fn(be + 1.0) * gamma_fn(al + 1.0) / gamma_fn(s + 2.0));
  return table;
}

void RecurrenceTable::eval(double x, std::span<double> out) const {
  const std::size_t m = out.size();
  if (m == 0) return;
  if (m > diag.size())
    throw std::invalid_argument("RecurrenceTable::eval: more values requested than table holds");
  out[0] = 1.0 / norm0;
  if (m == 1) return;
  out[1] = (x - diag[0]) * out[0] / offdiag[0];
  for (std::size_t k = 2; k < m; ++k)
    out[k] = ((x - diag[k - 1]) * out[k - 1] - offdiag[k - 2] * out[k - 2]) / offdiag[k - 1];
}

double cd_kernel(const RecurrenceTable& table, const JacobiParams& params, double x, double y) {
  if (x < 0.0 || x > 1.0 || y < 0.0 || y > 1.0)
    throw std::domain_error("cd_kernel: arguments must lie in [0, 1]");
  const int n = params.n;
  // Run both recurrences in lockstep and accumulate sum Q_k(x) Q_k(y).
  double qx0 = 1.0 / table.norm0, qy0 = qx0;
  double acc = qx0 * qy0;
  if (n > 1) {
    double qx1 = (x - table.diag[0]) * qx0 / table.offdiag[0];
    double qy1 = (y - table.diag[0]) * qy0 / table.offdiag[0];
    acc += qx1 * qy1;
    for (int k = 2; k < n; ++k) {
      const double qx2 =
          ((x - table.diag[k - 1]) * qx1 - table.offdiag[k - 2] * qx0) / table.offdiag[k - 1];
      const double qy2 =
          ((y - table.diag[k - 1]) * qy1 - table.offdiag[k - 2] * qy0) / table.offdiag[k - 1];
      acc += qx2 * qy2;
      qx0 = qx1;
      qx1 = qx2;
      qy0 = qy1;
      qy1 = qy2;
    }
  }
  const double w = std::pow(x, params.a_exp) * std::pow(1.0 - x, params.b_exp) *
                   std::pow(y, params.a_exp) * std::pow(1.0 - y, params.b_exp);
  return std::sqrt(w) * acc;
}

double cd_kernel(const JacobiParams& params, double x, double y) {
  return cd_kernel(jacobi_recurrence(params), params, x, y);
}

double bessel_kernel_diag_complex(int a, double t) {
  if (a < 0) throw std::invalid_argument("bessel_kernel_diag_complex: requires a >= 0");
  if (t < 0.0) throw std::domain_error("bessel_kernel_diag_complex: requires t >= 0");
  const double ja = bessel_j(BesselOrder(a), t);
  const double jap = bessel_j(BesselOrder(a + 1.0), t);
  const double jam = bessel_j(BesselOrder(a - 1.0), t);
  return 0.5 * (ja * ja - jap * jam);
}

// Both counting integrals run to sqrt(2) t: the interval [1, 1 + t/(sqrt2 p)]
// maps to Jacobi points in [0, t^2/(2 p^2)], which is [0, 2 t^2] at the
// microscopic hard-edge scale x = u/(4 p^2), i.e. |u| up to (sqrt2 t)^2.

double hard_edge_count_complex(int a, double t) {
  if (a < 0) throw std::invalid_argument("hard_edge_count_complex: requires a >= 0");
  if (t < 0.0) throw std::domain_error("hard_edge_count_complex: requires t >= 0");
  if (t == 0.0) return 0.0;
  auto integrand = [a](double x) { return x * bessel_kernel_diag_complex(a, x); };
  return adaptive_gauss_legendre(integrand, 0.0, std::sqrt(2.0) * t, 1e-9);
}

namespace {

// integral_0^x J_nu(u) du with the substitution u = v^2, which makes the
// integrand analytic at the origin.
double bessel_antiderivative(double nu, double x) {
  if (x <= 0.0) return 0.0;
  auto g = [nu](double v) { return 2.0 * v * bessel_j(BesselOrder(nu), v * v); };
  return adaptive_gauss_legendre(g, 0.0, std::sqrt(x), 1e-10);
}

}  // namespace

double hard_edge_count_real(int a, double t) {
  if (a < 0) throw std::invalid_argument("hard_edge_count_real: requires a >= 0");
  if (t < 0.0) throw std::domain_error("hard_edge_count_real: requires t >= 0");
  if (t == 0.0) return 0.0;
  const BesselOrder center(a);
  auto boundary_part = [&](double s) {
    return bessel_j(center, s) * (1.0 - bessel_antiderivative(a, s));
  };
  const double top = std::sqrt(2.0) * t;
  return hard_edge_count_complex(a, t) +
         0.5 * adaptive_gauss_legendre(boundary_part, 0.0, top, 5e-9);
}

double TwReference::cdf(double x) const {
  if (x <= quantiles.front().second) return quantiles.front().first;
  if (x >= quantiles.back().second) return quantiles.back().first;
  for (std::size_t i = 1; i < quantiles.size(); ++i) {
    if (x <= quantiles[i].second) {
      const auto& [p0, q0] = quantiles[i - 1];
      const auto& [p1, q1] = quantiles[i];
      return p0 + (p1 - p0) * (x - q0) / (q1 - q0);
    }
  }
  return quantiles.back().first;
}

}  // namespace projsum
