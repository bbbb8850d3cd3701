#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "projsum/interval.hpp"

namespace projsum {

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// 15-point Gauss-Legendre rule on [-1, 1].
inline constexpr std::array<std::pair<double, double>, 15> kGl15 = {{
    {-9.87992518020485377e-01, 3.07532419961186465e-02},
    {-9.37273392400705951e-01, 7.03660474881080689e-02},
    {-8.48206583410427206e-01, 1.07159220467171773e-01},
    {-7.24417731360170070e-01, 1.39570677926153908e-01},
    {-5.70972172608538830e-01, 1.66269205816993781e-01},
    {-3.94151347077563385e-01, 1.86161000015561878e-01},
    {-2.01194093997434514e-01, 1.98431485327111246e-01},
    {0.00000000000000000e+00, 2.02578241925560898e-01},
    {2.01194093997434514e-01, 1.98431485327111246e-01},
    {3.94151347077563385e-01, 1.86161000015561878e-01},
    {5.70972172608538830e-01, 1.66269205816993781e-01},
    {7.24417731360170070e-01, 1.39570677926153908e-01},
    {8.48206583410427206e-01, 1.07159220467171773e-01},
    {9.37273392400705951e-01, 7.03660474881080689e-02},
    {9.87992518020485377e-01, 3.07532419961186465e-02},
}};

template <class F>
double gl15_panel(F&& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (const auto& [node, weight] : kGl15) acc += weight * f(mid + half * node);
  return half * acc;
}

template <class F>
double adaptive_rec(F&& f, double a, double b, double whole, double tol, int depth) {
  const double mid = 0.5 * (a + b);
  const double left = gl15_panel(f, a, mid);
  const double right = gl15_panel(f, mid, b);
  const double refined = left + right;
  if (std::abs(refined - whole) <= tol) return refined;
  if (depth <= 0)
    throw QuadratureError("adaptive quadrature failed to converge within depth limit");
  return adaptive_rec(f, a, mid, left, 0.5 * tol, depth - 1) +
         adaptive_rec(f, mid, b, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Gauss-Legendre integration of f over [a, b] to absolute
/// tolerance abs_tol. The integrand must be continuous on the closed
/// interval; endpoint singularities belong to integrate() below.
template <class F>
double adaptive_gauss_legendre(F&& f, double a, double b, double abs_tol, int max_depth = 40) {
  if (a == b) return 0.0;
  const double whole = detail::gl15_panel(f, a, b);
  return detail::adaptive_rec(f, a, b, whole, abs_tol, max_depth);
}

/// Integral of f over iv to absolute tolerance tol. Inverse-square-root
/// endpoint singularities are removed by splitting at the midpoint and
/// substituting x = lo + u^2 (resp. x = hi - u^2), so f is never evaluated
/// at the endpoints themselves.
template <class F>
double integrate(F&& f, const Interval& iv, double tol) {
  const double lo = iv.lo, hi = iv.hi;
  if (!(lo <= hi)) throw std::invalid_argument("integrate: requires lo <= hi");
  if (lo == hi) return 0.0;
  const double mid = 0.5 * (lo + hi);
  auto left = [&](double u) { return 2.0 * u * f(lo + u * u); };
  auto right = [&](double u) { return 2.0 * u * f(hi - u * u); };
  return adaptive_gauss_legendre(left, 0.0, std::sqrt(mid - lo), 0.5 * tol) +
         adaptive_gauss_legendre(right, 0.0, std::sqrt(hi - mid), 0.5 * tol);
}

}  // namespace projsum
