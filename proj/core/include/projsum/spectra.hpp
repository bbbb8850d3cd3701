#pragma once

#include <span>
#include <utility>
#include <vector>

#include "projsum/ensembles.hpp"
#include "projsum/interval.hpp"

namespace projsum {

/// Eigenvalues of P + theta*Q split into the continuous part and the two
/// deterministic atoms: q-p eigenvalues at theta and N-p-q at zero.
struct Spectrum {
  std::vector<double> continuous_eigenvalues;  // sorted ascending
  int atom_at_zero = 0;
  int atom_at_theta = 0;
  double theta = 1.0;
  int total_dim = 0;
};

/// The two-fold eigenvalue map: a Jacobi point t in [0, 1] produces
///   lambda_pm = (1 + theta +- sqrt((1-theta)^2 + 4 theta t)) / 2.
/// Returned as (lambda_minus, lambda_plus) ordered by value. For theta = 1
/// the pair sums to exactly 2 in floating point.
std::pair<double, double> map_jacobi_to_sum(double t, double theta);

/// Inverse of the map: t = (lambda - 1)(lambda - theta) / theta; rejects
/// results outside [-1e-12, 1 + 1e-12] and clamps the residue.
double inverse_map(double lambda, double theta);

/// Assembles the full N-point spectrum predicted by the correspondence:
/// both branches of every Jacobi point plus the deterministic atoms.
Spectrum predicted_spectrum(std::span<const double> jacobi_points, const EnsembleParams& params);

/// Number of spectrum points (continuous and atoms) inside iv, honoring
/// open/closed endpoints.
int count_in_interval(const Spectrum& spec, const Interval& iv);

/// Splits directly computed eigenvalues into atoms and continuous part.
/// Eigenvalues within atom_tol of 0 or theta are classified as atoms; if
/// the counts disagree with the multiplicities forced by the ranks, exactly
/// the expected number nearest each atom is taken and a warning is printed.
Spectrum classify_eigenvalues(std::span<const double> eigenvalues_ascending,
                              const EnsembleParams& params, double atom_tol = 1e-8);

}  // namespace projsum
