#pragma once

#include <cstddef>
#include <vector>

#include "weddle/rational.hpp"

namespace weddle {

/// Dense row-major matrix of rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> data);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Rat> row(std::size_t i) const;
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_zero() const;
  RatMatrix transpose() const;

  bool operator==(const RatMatrix& other) const = default;
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rat& c, const RatMatrix& a);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// Reduced row-echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(RatMatrix& m);

std::size_t rank(RatMatrix m);

/// Basis of the right nullspace {v : m v = 0}, one vector per free column,
/// with a 1 in that free position (the standard RREF basis).
std::vector<std::vector<Rat>> nullspace(const RatMatrix& m);

/// Fraction-based Gaussian elimination determinant.
Rat determinant(RatMatrix m);

/// Inverse of a square nonsingular matrix; throws std::domain_error if singular.
RatMatrix inverse(const RatMatrix& m);

std::vector<Rat> mat_vec(const RatMatrix& m, const std::vector<Rat>& v);

}  // namespace weddle
