#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "weddle/poly.hpp"
#include "weddle/polymatrix.hpp"
#include "weddle/solve.hpp"

namespace weddle {

/// y^2 = x^3 + a x + b
struct ShortWeierstrass {
  Rat a;
  Rat b;
  bool operator==(const ShortWeierstrass&) const = default;
};

/// 6912 a^3 / (4 a^3 + 27 b^2); throws std::domain_error when the
/// denominator vanishes.
Rat j_short(const ShortWeierstrass& w);

/// Second partials of a homogeneous cubic. Throws for other degrees.
PolyMatrix hessian(const MultiPoly& f);

enum class Smoothness { Smooth, Singular, Indeterminate };

/// Singular-point count from the solver; Indeterminate when uncertified.
Smoothness is_smooth_cubic(const MultiPoly& f, const SolverConfig& cfg = {});

/// c4, c6 of a long Weierstrass model reached by sending a flex to [0:1:0]
/// with tangent z = 0. Exact version of the reduction.
std::pair<Rat, Rat> flex_invariants(const MultiPoly& f, const std::vector<Rat>& flex);

/// The short model of the global minimal model: scale (c4, c6) by (u^4, u^6)
/// until the Kraus conditions hold with the smallest discriminant, then
/// a = -c4/48, b = -c6/864.
ShortWeierstrass canonical_short_form(const Rat& c4, const Rat& c6);
ShortWeierstrass canonical_short_form(const ShortWeierstrass& w);

/// Rational flex points of f with integer coordinates bounded by height,
/// primitive with first nonzero coordinate positive, sorted by height then
/// lexicographically.
std::vector<std::vector<Rat>> rational_flexes(const MultiPoly& f, int height = 3);

struct WeierstrassResult {
  bool exact = false;
  std::optional<ShortWeierstrass> form;  // exact path only
  std::vector<Rat> flex;                 // exact path only
  std::complex<double> a_num;
  std::complex<double> b_num;
  CPoint flex_num;
  double flex_residual = 0.0;
  bool certified = false;
};

/// Exact path through a rational flex when one is found (small-height search,
/// then reconstruction of numeric flexes); numeric path otherwise.
WeierstrassResult weierstrass_reduce(const MultiPoly& f, const SolverConfig& cfg = {}, bool force_numeric = false);

struct JInvariant {
  bool exact = false;
  Rat value;                    // exact path
  std::complex<double> numeric;
  double flex_residual = 0.0;
  bool certified = false;
};

JInvariant j_invariant(const MultiPoly& f, const SolverConfig& cfg = {}, bool force_numeric = false);

}  // namespace weddle
