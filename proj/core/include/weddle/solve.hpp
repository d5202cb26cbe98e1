#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weddle/poly.hpp"
#include "weddle/system.hpp"

namespace weddle {

struct SolverConfig {
  double track_tol = 1e-9;
  double residual_tol = 1e-8;
  double cluster_radius = 1e-6;
  std::uint64_t seed = 20240601;
  int max_retries = 3;
  int max_charts = 4;
  unsigned threads = 0;  // 0: hardware concurrency
  long rational_height = 32;
};

using CPoint = std::vector<std::complex<double>>;

/// Unit Euclidean norm, first coordinate above 1e-6 in modulus rotated onto
/// the positive real axis.
CPoint normalize_projective(const CPoint& p);

/// Sine of the angle between the lines spanned by a and b.
double projective_distance(const CPoint& a, const CPoint& b);

struct Cluster {
  CPoint point;
  int multiplicity = 1;
  double residual = 0.0;
  /// Primitive integer representative when a small-height rational point
  /// was found nearby and checked exactly.
  std::optional<std::vector<Rat>> rational_match;
};

struct SolutionSet {
  bool projective = false;
  std::vector<Cluster> clusters;
  int bezout_bound = 0;
  int paths_tracked = 0;
  int paths_failed = 0;
  int at_infinity = 0;
  /// endpoints of the squared-up system that miss the original equations
  int discarded = 0;
  int charts_used = 0;
  bool certified = false;
  std::vector<std::string> notes;

  std::size_t count() const { return clusters.size(); }
};

/// Total-degree homotopy for n polynomials in n affine unknowns. Clusters
/// are the finite solutions; endpoints at infinity are counted separately.
SolutionSet solve_square(const std::vector<MultiPoly>& system, const SolverConfig& cfg = {});

/// Isolated common zeros in P^n of homogeneous polynomials in n+1 variables
/// (at least n of them, of equal degree when there are more than n).
/// Tracks n random combinations in random affine charts until two charts
/// agree on the points that satisfy every equation.
SolutionSet projective_solve(const std::vector<MultiPoly>& eqs, const SolverConfig& cfg = {});

SolutionSet base_points(const LinearSystem& sys, const SolverConfig& cfg = {});

/// Common zeros of the partial derivatives. Throws if f is zero or constant.
SolutionSet singular_points(const MultiPoly& f, const SolverConfig& cfg = {});

}  // namespace weddle
