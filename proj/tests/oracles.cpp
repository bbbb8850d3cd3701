#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace oracles {

namespace {

constexpr long double kPiL = 3.14159265358979323846264338327950288L;

long double series_bessel(long double nu, long double x) {
  const long double half = x / 2.0L;
  long double term = std::pow(half, nu) / std::tgamma(nu + 1.0L);
  long double sum = term;
  for (int m = 1; m < 400; ++m) {
    term *= -half * half / (static_cast<long double>(m) * (m + nu));
    sum += term;
    if (std::fabs(term) < 1e-25L * std::fabs(sum) + 1e-4900L) break;
  }
  return sum;
}

// Bessel's integral: J_nu(x) = (1/pi) int_0^pi cos(nu h - x sin h) dh
//                  - sin(nu pi)/pi int_0^inf exp(-x sinh t - nu t) dt.
long double integral_bessel(long double nu, long double x) {
  const int n = 40000;
  long double acc = 0.0L;
  const long double h = kPiL / n;
  for (int i = 0; i <= n; ++i) {
    const long double th = i * h;
    const long double v = std::cos(nu * th - x * std::sin(th));
    acc += (i == 0 || i == n) ? v : ((i % 2) ? 4.0L * v : 2.0L * v);
  }
  long double first = acc * h / 3.0L / kPiL;
  const long double s = std::sin(nu * kPiL);
  if (s == 0.0L) return first;
  const long double tmax = std::asinh(900.0L / x) + 1.0L;
  const long double ht = tmax / n;
  acc = 0.0L;
  for (int i = 0; i <= n; ++i) {
    const long double t = i * ht;
    const long double v = std::exp(-x * std::sinh(t) - nu * t);
    acc += (i == 0 || i == n) ? v : ((i % 2) ? 4.0L * v : 2.0L * v);
  }
  return first - s / kPiL * (acc * ht / 3.0L);
}

}  // namespace

double bessel_j(double nu, double x) {
  if (x < 0.0) throw std::invalid_argument("oracle bessel_j: x >= 0");
  if (nu < 0.0 && nu == std::floor(nu)) {
    const int m = static_cast<int>(-nu);
    const double v = bessel_j(static_cast<double>(m), x);
    return (m % 2 == 0) ? v : -v;
  }
  if (x == 0.0) return nu == 0.0 ? 1.0 : (nu > 0.0 ? 0.0 : INFINITY);
  if (x <= 15.0) return static_cast<double>(series_bessel(nu, x));
  return static_cast<double>(integral_bessel(nu, x));
}

double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double acc = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double v = f(a + i * h);
    acc += (i == 0 || i == n) ? v : ((i % 2) ? 4.0 * v : 2.0 * v);
  }
  return acc * h / 3.0;
}

MomentRecurrence jacobi_by_moments(int n, double a, double b) {
  // Moments mu_k = Beta(a+k+1, b+1), exactly via lgamma in long double.
  const auto moment = [&](int k) {
    return std::exp(std::lgamma(a + k + 1.0L) + std::lgamma(b + 1.0L) -
                     std::lgamma(a + b + k + 2.0L));
  };
  const int terms = 2 * n + 2;
  std::vector<long double> mu(terms + 1);
  for (int k = 0; k <= terms; ++k) mu[k] = moment(k);

  // Monomial-coefficient Gram-Schmidt. coef[k][j] holds the x^j coefficient
  // of the orthonormal Q_k.
  std::vector<std::vector<long double>> coef(n + 1);
  const auto inner = [&](const std::vector<long double>& f, const std::vector<long double>& g,
                         int shift) {
    long double acc = 0.0L;
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j) acc += f[i] * g[j] * mu[i + j + shift];
    return acc;
  };
  for (int k = 0; k <= n; ++k) {
    std::vector<long double> v(k + 1, 0.0L);
    v[k] = 1.0L;  // x^k
    for (int m = 0; m < k; ++m) {
      const long double proj = inner(v, coef[m], 0);
      for (std::size_t j = 0; j < coef[m].size(); ++j) v[j] -= proj * coef[m][j];
    }
    const long double norm = std::sqrt(inner(v, v, 0));
    for (auto& c : v) c /= norm;
    coef[k] = std::move(v);
  }

  MomentRecurrence rec;
  rec.norm0 = static_cast<double>(std::sqrt(mu[0]));
  for (int k = 0; k < n; ++k)
    rec.diag.push_back(static_cast<double>(inner(coef[k], coef[k], 1)));  // <x Q_k, Q_k>
  for (int k = 0; k + 1 < n; ++k)
    rec.offdiag.push_back(static_cast<double>(inner(coef[k], coef[k + 1], 1)));
  return rec;
}

double shifted_legendre_orthonormal(int k, double x) {
  const double u = 2.0 * x - 1.0;
  double p;
  switch (k) {
    case 0: p = 1.0; break;
    case 1: p = u; break;
    case 2: p = 0.5 * (3.0 * u * u - 1.0); break;
    case 3: p = 0.5 * (5.0 * u * u * u - 3.0 * u); break;
    case 4: p = 0.125 * (35.0 * u * u * u * u - 30.0 * u * u + 3.0); break;
    default: throw std::invalid_argument("oracle legendre: k <= 4");
  }
  return std::sqrt(2.0 * k + 1.0) * p;
}

}  // namespace oracles
