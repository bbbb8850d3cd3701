#include "projsum/densities.hpp"

#include <cmath>
#include <stdexcept>

namespace projsum {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

LimitParams::LimitParams(double p_, double q_) : p(p_), q(q_) {
  if (!(p > 0.0 && p < 1.0 && q > 0.0 && q < 1.0))
    throw std::invalid_argument("LimitParams: fractions must lie in (0, 1)");
  if (p > q) {
    std::swap(p, q);
    swapped = true;
  }
  const double lhs = c();
  const double rhs = 0.5 * (1.0 + a() * a() - b() * b());
  if (std::abs(lhs - rhs) > 1e-14)
    throw std::logic_error("LimitParams: c identity violated");
}

double LimitShape::total_mass(double tol) const {
  double mass = 0.0;
  for (const auto& iv : intervals) mass += integrate(density, iv, tol);
  for (const auto& atom : atoms) mass += atom.weight;
  return mass;
}

std::pair<Interval, Interval> support_sum(const LimitParams& lp) {
  const double r1 = std::sqrt(lp.q * (1.0 - lp.p));
  const double r2 = std::sqrt(lp.p * (1.0 - lp.q));
  const double lo = std::abs(r1 - r2);
  const double hi = r1 + r2;
  return {Interval::closed(1.0 + lo, 1.0 + hi), Interval::closed(1.0 - hi, 1.0 - lo)};
}

double limit_density_sum(const LimitParams& lp, double x) {
  if (x == 0.0 || x == 1.0 || x == 2.0)
    throw std::domain_error("limit_density_sum: pole at x in {0, 1, 2}");
  const double u = x - 1.0;
  const double u2 = u * u;
  const double a = lp.a();
  const double disc = -a * a + 2.0 * lp.c() * u2 - u2 * u2;
  if (disc <= 0.0) return 0.0;  // outside the continuous support
  return std::abs(std::sqrt(disc) / (x * u * (x - 2.0))) / kPi;
}

std::vector<Atom> atoms_sum(const LimitParams& lp) {
  std::vector<Atom> atoms;
  const double a = lp.a();
  const double b = lp.b();
  if (a != 0.0) atoms.push_back({1.0, std::abs(a)});
  if (b > 0.0) atoms.push_back({0.0, b});
  if (b < 0.0) atoms.push_back({2.0, -b});
  return atoms;
}

LimitShape sum_shape(const LimitParams& lp) {
  const auto [i1, i2] = support_sum(lp);
  LimitShape shape;
  shape.intervals = {i2, i1};  // ascending order
  shape.atoms = atoms_sum(lp);
  shape.density = [lp](double x) { return limit_density_sum(lp, x); };
  return shape;
}

Interval support_jacobi(double s, double t) {
  if (s < 0.0 || t < 0.0) throw std::invalid_argument("support_jacobi: requires s, t >= 0");
  const double den = 2.0 + t + s;
  const double c = 0.5 * (1.0 + (s * s - t * t) / (den * den));
  // The printed d of the source formula lacks this factor 2; with it the
  // s = t = 0 case correctly degenerates to [0, 1] (arcsine support) and
  // the endpoints match the squared endpoints of support_sum.
  const double d = 2.0 * std::sqrt((1.0 + s) * (1.0 + t) * (1.0 + t + s)) / (den * den);
  return Interval::closed(c - d, c + d);
}

double limit_density_jacobi(double s, double t, double x) {
  if (s < 0.0 || t < 0.0)
    throw std::invalid_argument("limit_density_jacobi: requires s, t >= 0");
  if (x == 0.0 || x == 1.0) throw std::domain_error("limit_density_jacobi: pole at x in {0, 1}");
  const double den = 2.0 + t + s;
  const double a = s / den;
  const double c = 0.5 * (1.0 + (s * s - t * t) / (den * den));
  const double disc = -a * a + 2.0 * c * x - x * x;
  if (disc <= 0.0) return 0.0;
  return den / (2.0 * kPi) * std::abs(std::sqrt(disc) / (x * (x - 1.0)));
}

LimitShape jacobi_shape(double s, double t) {
  LimitShape shape;
  shape.intervals = {support_jacobi(s, t)};
  shape.density = [s, t](double x) { return limit_density_jacobi(s, t, x); };
  return shape;
}

double johnstone_edge(double s, double t) {
  if (s < 0.0 || t < 0.0) throw std::invalid_argument("johnstone_edge: requires s, t >= 0");
  const double den = 2.0 + t + s;
  const double phi = std::acos((t - s) / den);
  const double gamma = std::acos((t + s) / den);
  return 0.5 * (1.0 - std::cos(phi + gamma));
}

}  // namespace projsum
