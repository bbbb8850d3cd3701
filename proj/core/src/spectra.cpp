#include "projsum/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace projsum {

std::pair<double, double> map_jacobi_to_sum(double t, double theta) {
  if (!(t >= 0.0 && t <= 1.0))
    throw std::domain_error("map_jacobi_to_sum: t must lie in [0, 1]");
  if (theta == 0.0 || !std::isfinite(theta))
    throw std::domain_error("map_jacobi_to_sum: theta must be nonzero");
  const double disc = (1.0 - theta) * (1.0 - theta) + 4.0 * theta * t;
  const double root = std::sqrt(std::max(disc, 0.0));
  const double sum = 1.0 + theta;
  const double hi = 0.5 * (sum + root);
  // The complementary branch as sum - hi keeps lambda- + lambda+ = 1 + theta
  // exact in floating point (Sterbenz: hi lies in [sum/2, 2*sum] for theta > -1).
  const double lo = sum - hi;
  return {std::min(lo, hi), std::max(lo, hi)};
}

double inverse_map(double lambda, double theta) {
  if (theta == 0.0 || !std::isfinite(theta))
    throw std::domain_error("inverse_map: theta must be nonzero");
  const double t = (lambda - 1.0) * (lambda - theta) / theta;
  if (t < -1e-12 || t > 1.0 + 1e-12)
    throw std::domain_error("inverse_map: lambda is not in the image of the map");
  return std::clamp(t, 0.0, 1.0);
}

Spectrum predicted_spectrum(std::span<const double> jacobi_points, const EnsembleParams& params) {
  if (static_cast<int>(jacobi_points.size()) != params.p_rank)
    throw std::invalid_argument("predicted_spectrum: expected p_rank Jacobi points");
  if (params.p_rank + params.q_rank > params.dimension)
    throw std::invalid_argument("predicted_spectrum: p + q > N leaves no room for zero atoms");

  Spectrum spec;
  spec.theta = params.theta;
  spec.total_dim = params.dimension;
  spec.atom_at_theta = params.atom_theta_count();
  spec.atom_at_zero = params.atom_zero_count();
  spec.continuous_eigenvalues.reserve(2 * jacobi_points.size());
  for (double t : jacobi_points) {
    if (!(t >= -1e-12 && t <= 1.0 + 1e-12))
      throw std::invalid_argument("predicted_spectrum: Jacobi point outside [0, 1]");
    const auto [lo, hi] = map_jacobi_to_sum(std::clamp(t, 0.0, 1.0), params.theta);
    spec.continuous_eigenvalues.push_back(lo);
    spec.continuous_eigenvalues.push_back(hi);
  }
  std::sort(spec.continuous_eigenvalues.begin(), spec.continuous_eigenvalues.end());
  return spec;
}

int count_in_interval(const Spectrum& spec, const Interval& iv) {
  const auto& xs = spec.continuous_eigenvalues;
  auto lower = std::lower_bound(xs.begin(), xs.end(), iv.lo);
  auto upper = std::upper_bound(xs.begin(), xs.end(), iv.hi);
  int count = static_cast<int>(upper - lower);
  if (!iv.closed_lo) count -= static_cast<int>(std::count(lower, upper, iv.lo));
  if (!iv.closed_hi) count -= static_cast<int>(std::count(lower, upper, iv.hi));
  if (iv.contains(0.0)) count += spec.atom_at_zero;
  if (iv.contains(spec.theta)) count += spec.atom_at_theta;
  return count;
}

namespace {

// Picks the `expected` indices among `candidates` nearest to `center`,
// removing them from `candidates` (which must stay sorted by value).
std::vector<double> take_nearest(std::vector<double>& candidates, double center, int expected) {
  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return std::abs(candidates[i] - center) < std::abs(candidates[j] - center);
  });
  order.resize(expected);
  std::sort(order.begin(), order.end());
  std::vector<double> taken;
  taken.reserve(expected);
  std::vector<double> rest;
  rest.reserve(candidates.size() - expected);
  std::size_t next = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (next < order.size() && order[next] == i) {
      taken.push_back(candidates[i]);
      ++next;
    } else {
      rest.push_back(candidates[i]);
    }
  }
  candidates = std::move(rest);
  return taken;
}

}  // namespace

Spectrum classify_eigenvalues(std::span<const double> eigenvalues_ascending,
                              const EnsembleParams& params, double atom_tol) {
  if (static_cast<int>(eigenvalues_ascending.size()) != params.dimension)
    throw std::invalid_argument("classify_eigenvalues: expected N eigenvalues");

  const int expect_zero = std::max(params.atom_zero_count(), 0);
  const int expect_theta = params.atom_theta_count();

  std::vector<double> values(eigenvalues_ascending.begin(), eigenvalues_ascending.end());
  const auto near = [&](double x, double center) { return std::abs(x - center) <= atom_tol; };
  const int found_zero = static_cast<int>(
      std::count_if(values.begin(), values.end(), [&](double x) { return near(x, 0.0); }));
  const int found_theta = static_cast<int>(std::count_if(
      values.begin(), values.end(), [&](double x) { return near(x, params.theta); }));

  Spectrum spec;
  spec.theta = params.theta;
  spec.total_dim = params.dimension;
  spec.atom_at_zero = expect_zero;
  spec.atom_at_theta = expect_theta;

  if (found_zero != expect_zero || found_theta != expect_theta) {
    std::fprintf(stderr,
                 "projsum: atom classification fell back to nearest-multiplicity "
                 "(found %d/%d at 0, %d/%d at theta)\n",
                 found_zero, expect_zero, found_theta, expect_theta);
  }
  // Nearest-multiplicity accounting: exactly the expected number per atom,
  // zeros first. With the default tolerance this coincides with the
  // tolerance classification whenever the counts already match.
  take_nearest(values, 0.0, expect_zero);
  take_nearest(values, params.theta, expect_theta);
  spec.continuous_eigenvalues = std::move(values);
  return spec;
}

}  // namespace projsum
