#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "weddle/linalg.hpp"
#include "weddle/poly.hpp"
#include "weddle/polymatrix.hpp"
#include "weddle/solve.hpp"
#include "weddle/system.hpp"

namespace weddle {

using RatPoint = std::vector<Rat>;

struct WeddleData {
  PolyMatrix matrix{1, 1};     // (i, k) = sum_j x_j T_{ijk}
  MultiPoly determinant{1};    // det(matrix), not normalized
  MultiPoly polynomial{1};     // primitive, positive leading coefficient
  bool degenerate = false;     // det(matrix) == 0
};

/// (i, k) entry sum_j x_j (Q_k)_{ij}.
PolyMatrix contraction_matrix(const LinearSystem& sys);
/// (i, k) entry d Q_k / d x_i.
PolyMatrix gradient_matrix(const LinearSystem& sys);

/// Throws std::logic_error if the gradient matrix is not twice the
/// contraction matrix.
WeddleData weddle_matrix(const LinearSystem& sys);

/// Every partial derivative of f vanishes at p. Throws on p == 0.
bool singular_at(const MultiPoly& f, const RatPoint& p);

bool is_base_point(const LinearSystem& sys, const RatPoint& p);

/// singular_at(weddle polynomial, p); throws std::invalid_argument unless p
/// is a base point.
bool base_point_theorem_check(const LinearSystem& sys, const RatPoint& p);

/// sum_k x_k * x^T Q_k x
MultiPoly cyclic_relation_check(const LinearSystem& sys);

/// Basis of the quadrics in P^n through the given points, from the reduced
/// echelon nullspace of the evaluation matrix on the graded-lex degree-2
/// monomials.
std::vector<RatMatrix> quadrics_through_points(const std::vector<RatPoint>& points, std::size_t n);

/// Q_k = sum_i coeffs(k, i) l_i l_i^T for linear forms l_i; coeffs is
/// (n+1) x r.
LinearSystem rank_r_system(const std::vector<MultiPoly>& forms, const RatMatrix& coeffs);

/// Q_k = sum_i M(i, k) x_i^2 + (x0 + x1 + x2 + x3)^2.
LinearSystem rank5_system(const RatMatrix& M);

struct Rank5Data {
  RatMatrix M;
  Rat detM;
  std::array<Rat, 4> mu;
};

/// mu_s: det of M with row s replaced by (1, 1, 1, 1).
Rank5Data mu_invariants(const RatMatrix& M);

/// det(Xi + D M), Xi the all-xi matrix, xi = x0 + x1 + x2 + x3, D = diag(x).
MultiPoly rank5_determinant(const RatMatrix& M);
/// det(D M) plus the four determinants with one column of D M replaced by xi.
MultiPoly rank5_column_expansion(const RatMatrix& M);
/// (det M + sum mu) x0x1x2x3 + sum over triples of mu_s (x_i^2 x_j x_k + ...).
MultiPoly rank5_closed_form(const Rank5Data& data);
bool rank5_identity_check(const RatMatrix& M);

/// The ten points where the closed form has vanishing gradient.
std::vector<RatPoint> rank5_special_points();

enum class RankConclusion { RankAtLeast6, Inconclusive };

struct RankCertificate {
  std::size_t singular_count = 0;
  bool count_certified = false;
  RankConclusion conclusion = RankConclusion::Inconclusive;
  SolutionSet evidence;
};

/// Needs n = 3 and a nonzero Weddle polynomial.
RankCertificate rank_lower_bound_certificate(const LinearSystem& sys, const SolverConfig& cfg = {});

/// Writes f as a scalar times a product of linear forms through n of the given
/// points. Factors are primitive and sorted in graded-lex order.
std::optional<std::vector<MultiPoly>> splits_into_hyperplanes(const MultiPoly& f,
                                                              const std::vector<RatPoint>& singular_pts);

/// The system of partial derivatives of a form.
LinearSystem partials_system(const MultiPoly& f);

/// 2 * weddle_matrix(partials_system(f)).matrix == hessian_matrix(f). Throws
/// unless f is a homogeneous cubic.
bool hessian_equals_weddle_check(const MultiPoly& f);

}  // namespace weddle
