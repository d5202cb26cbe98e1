#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "weddle/linalg.hpp"
#include "weddle/rational.hpp"

namespace weddle {

/// Dense cubic tensor of order 3.
///
/// Index convention: at(i, j, k) is the (row i, column j) entry of face k,
/// faces ordered front (k = 0) to back. No symmetry is assumed here; the
/// predicates below check the defining linear equations of each subspace.
class Tensor3 {
 public:
  explicit Tensor3(std::size_t dim = 1);

  static Tensor3 basis_element(std::size_t dim, std::size_t i, std::size_t j, std::size_t k);
  /// Faces given front to back, each as a dim x dim matrix.
  static Tensor3 from_faces(const std::vector<RatMatrix>& faces);

  std::size_t dim() const { return dim_; }

  Rat& at(std::size_t i, std::size_t j, std::size_t k) { return data_[index(i, j, k)]; }
  const Rat& at(std::size_t i, std::size_t j, std::size_t k) const { return data_[index(i, j, k)]; }

  RatMatrix face(std::size_t k) const;
  const std::vector<Rat>& flat() const { return data_; }

  bool is_zero() const;

  Tensor3& operator+=(const Tensor3& other);
  Tensor3& operator-=(const Tensor3& other);
  Tensor3& operator*=(const Rat& c);
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend Tensor3 operator*(const Rat& c, Tensor3 a) { return a *= c; }

  bool operator==(const Tensor3& other) const = default;

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
    return (k * dim_ + i) * dim_ + j;
  }

  std::size_t dim_;
  std::vector<Rat> data_;
};

enum class SymmetryClass { Symmetric, SkewSymmetric, Residual, Residual1, Residual2, PartialSym12 };

std::string to_string(SymmetryClass c);

/// Symmetrization: average over all six index permutations.
Tensor3 sym_part(const Tensor3& t);
/// Signed average over index permutations.
Tensor3 skew_part(const Tensor3& t);
/// N(T)_{ijk} = (2 T_{ijk} - T_{jki} - T_{kij}) / 3, i.e. T - S(T) - A(T).
Tensor3 residual_part(const Tensor3& t);
/// N1(T)_{ijk} = (T_{ijk} + T_{jik} - T_{kji} - T_{kij}) / 3
Tensor3 n1_part(const Tensor3& t);
/// N2(T)_{ijk} = (T_{ijk} - T_{jik} + T_{kji} - T_{jki}) / 3
Tensor3 n2_part(const Tensor3& t);

struct Decomposition {
  Tensor3 sym;
  Tensor3 n1;
  Tensor3 n2;
  Tensor3 skew;
};

/// t == sym + n1 + n2 + skew, each part in its summand.
Decomposition decompose(const Tensor3& t);

bool is_symmetric(const Tensor3& t);
bool is_skew_symmetric(const Tensor3& t);
/// Cyclic relation T_{ijk} + T_{jki} + T_{kij} = 0.
bool in_NV(const Tensor3& t);
/// Cyclic relation plus T_{ijk} = T_{jik}.
bool in_N1V(const Tensor3& t);
/// Cyclic relation plus T_{ijk} = T_{kji}.
bool in_N2V(const Tensor3& t);
/// T_{ijk} = T_{jik}: every face is a symmetric matrix.
bool is_partially_symmetric_12(const Tensor3& t);
bool belongs_to(const Tensor3& t, SymmetryClass c);

/// Apply the projector of the given class (PartialSym12 is not a projector
/// of the decomposition and is rejected).
Tensor3 project(SymmetryClass c, const Tensor3& t);

/// Basis of a summand, obtained by applying its projector to e_i (x) e_j (x) e_k
/// over the index sets
///   Symmetric:     j <= i <= k
///   SkewSymmetric: j >  i >  k
///   Residual1:     j <= i >  k
///   Residual2:     j >  i <= k
/// enumerated in lexicographic (i, j, k) order. Throws for other classes.
std::vector<Tensor3> basis(SymmetryClass c, std::size_t dim);
/// The (i, j, k) behind each element of basis(c, dim), same order.
std::vector<std::array<std::size_t, 3>> basis_index_triples(SymmetryClass c, std::size_t dim);

/// Expected summand dimensions for dim = n + 1.
std::size_t expected_dimension(SymmetryClass c, std::size_t dim);

/// Matrix of the projector acting on the dim^3 coordinates of V^{(x)3}.
RatMatrix projector_matrix(SymmetryClass c, std::size_t dim);

/// Drop the last face and the last row/column of the others.
/// Throws std::invalid_argument if t is not cyclic-symmetric or dim < 2.
Tensor3 restrict_n1(const Tensor3& t);

/// Grow s (cyclic-symmetric, dim n) to dim n + 1. free[k][s] is the new entry
/// T_{snk} of face k (k < n, s <= n); the corner of face k becomes 2 * free[k][n]
/// and the last face is fixed by the cyclic relation.
Tensor3 extend_n1(const Tensor3& s, const std::vector<std::vector<Rat>>& free);

/// A general element of N1V: integer coefficients uniform in [-9, 9] on the
/// Residual1 basis, deterministic in the seed.
Tensor3 random_n1(std::size_t dim, std::uint64_t seed);

}  // namespace weddle
