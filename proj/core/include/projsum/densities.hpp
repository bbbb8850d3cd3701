#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "projsum/interval.hpp"
#include "projsum/quadrature.hpp"

namespace projsum {

/// Limiting fractional ranks p <= q of the two projections (swapped and
/// flagged if given in the other order). Derived quantities: a = q - p,
/// b = 1 - p - q (possibly negative), c = p(1-q) + q(1-p); the identity
/// c = (1 + a^2 - b^2)/2 is asserted at construction.
struct LimitParams {
  double p;
  double q;
  bool swapped = false;

  LimitParams(double p, double q);

  double a() const { return q - p; }
  double b() const { return 1.0 - p - q; }
  double c() const { return p * (1.0 - q) + q * (1.0 - p); }
};

struct Atom {
  double location;
  double weight;
};

/// Limiting spectral shape: continuous support intervals, a density
/// evaluator on the support, and point masses.
struct LimitShape {
  std::vector<Interval> intervals;
  std::vector<Atom> atoms;
  std::function<double(double)> density;

  /// Quadrature mass of the continuous part plus atom weights.
  double total_mass(double tol = 1e-8) const;
};

/// Continuous support of the limit law of P + Q: (I1, I2) = (1 + I, 1 - I)
/// with I = [ |sqrt(q(1-p)) - sqrt(p(1-q))| , sqrt(q(1-p)) + sqrt(p(1-q)) ].
/// The upper edge of I1 is 1 + mu with mu the soft-edge centering constant.
std::pair<Interval, Interval> support_sum(const LimitParams& lp);

/// Limit density of P + Q at x (absolute value of the signed closed form,
/// which reproduces the arcsine law 1/(pi sqrt(x(2-x))) at p = q = 1/2).
/// Returns 0 outside the support; x in {0, 1, 2} is a pole and rejected.
double limit_density_sum(const LimitParams& lp, double x);

/// Atoms of the limit law: weight |a| at 1 when a != 0, weight b at 0 when
/// b > 0, weight -b at 2 when b < 0.
std::vector<Atom> atoms_sum(const LimitParams& lp);

/// Assembled limit shape of P + Q.
LimitShape sum_shape(const LimitParams& lp);

/// Support [c - d, c + d] of the Jacobi level density with weight-exponent
/// rates s, t >= 0, with d = 2 sqrt((1+s)(1+t)(1+s+t)) / (2+t+s)^2.
Interval support_jacobi(double s, double t);

/// Limit level density of the Hermitian Jacobi ensemble at x in (0, 1);
/// x in {0, 1} is a pole and rejected.
double limit_density_jacobi(double s, double t, double x);

/// Assembled Jacobi limit shape (no atoms).
LimitShape jacobi_shape(double s, double t);

/// The concentration point of the largest Jacobi point,
/// x = (1 - cos(phi + gamma)) / 2 with cos phi = (t-s)/(2+t+s) and
/// cos gamma = (t+s)/(2+t+s); coincides with the upper support edge c + d.
double johnstone_edge(double s, double t);

}  // namespace projsum
