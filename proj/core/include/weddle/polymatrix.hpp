#pragma once

#include <cstddef>
#include <vector>

#include "weddle/poly.hpp"

namespace weddle {

/// Square matrix of polynomials over a common ring.
class PolyMatrix {
 public:
  /// Largest size det() accepts.
  static constexpr std::size_t kMaxDetSize = 8;

  PolyMatrix(std::size_t size, std::size_t nvars);

  std::size_t size() const { return size_; }
  std::size_t nvars() const { return nvars_; }

  MultiPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * size_ + j]; }
  const MultiPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }

  /// Every entry is a homogeneous linear form (or zero).
  bool entries_are_linear_forms() const;
  bool is_symmetric() const;

  PolyMatrix scaled(const Rat& c) const;
  Rat evaluate_entry(std::size_t i, std::size_t j, const std::vector<Rat>& pt) const;

  bool operator==(const PolyMatrix& other) const;

 private:
  std::size_t size_;
  std::size_t nvars_;
  std::vector<MultiPoly> entries_;
};

/// Laplace expansion along rows, memoizing minors by the set of columns still
/// in play. The 0x0 determinant is 1. Throws for sizes above kMaxDetSize.
MultiPoly det(const PolyMatrix& m);

/// Matrix of second partials d^2 p / dx_i dx_j.
PolyMatrix hessian_matrix(const MultiPoly& p);

}  // namespace weddle
