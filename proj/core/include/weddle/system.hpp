#pragma once

#include <cstddef>
#include <vector>

#include "weddle/linalg.hpp"
#include "weddle/poly.hpp"
#include "weddle/tensor.hpp"

namespace weddle {

/// Linear system of quadrics Q_0..Q_n in P^n, each a symmetric
/// (n+1)x(n+1) rational matrix. The associated tensor is T_{ijk} = (Q_k)_{ij}.
struct LinearSystem {
  std::size_t n = 0;
  std::vector<RatMatrix> quadrics;

  /// Throws std::invalid_argument unless there are n+1 symmetric
  /// (n+1)x(n+1) matrices.
  void validate() const;

  /// Requires T_{ijk} = T_{jik}.
  static LinearSystem from_tensor(const Tensor3& t);
  Tensor3 to_tensor() const;

  std::size_t nvars() const { return n + 1; }
  std::vector<MultiPoly> polynomials() const;
};

/// x^T Q x
MultiPoly quadric_poly(const RatMatrix& q);

/// Symmetric matrix of a homogeneous quadratic form (diagonal = coefficient of
/// x_i^2, off-diagonal = half the coefficient of x_i x_j).
RatMatrix quadric_matrix(const MultiPoly& q);

}  // namespace weddle
