#include "weddle/tensor.hpp"

#include <random>
#include <stdexcept>

namespace weddle {

Tensor3::Tensor3(std::size_t dim) : dim_(dim), data_(dim * dim * dim) {
  if (dim == 0) throw std::invalid_argument("tensor dimension must be positive");
}

Tensor3 Tensor3::basis_element(std::size_t dim, std::size_t i, std::size_t j, std::size_t k) {
  Tensor3 t(dim);
  t.at(i, j, k) = 1;
  return t;
}

Tensor3 Tensor3::from_faces(const std::vector<RatMatrix>& faces) {
  const std::size_t d = faces.size();
  Tensor3 t(d);
  for (std::size_t k = 0; k < d; ++k) {
    if (faces[k].rows() != d || faces[k].cols() != d)
      throw std::invalid_argument("tensor faces must be dim x dim with dim faces");
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) t.at(i, j, k) = faces[k](i, j);
  }
  return t;
}

RatMatrix Tensor3::face(std::size_t k) const {
  RatMatrix f(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) f(i, j) = at(i, j, k);
  return f;
}

bool Tensor3::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

Tensor3& Tensor3::operator+=(const Tensor3& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("tensor dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("tensor dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Tensor3& Tensor3::operator*=(const Rat& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

std::string to_string(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::Symmetric: return "Symmetric";
    case SymmetryClass::SkewSymmetric: return "SkewSymmetric";
    case SymmetryClass::Residual: return "Residual";
    case SymmetryClass::Residual1: return "Residual1";
    case SymmetryClass::Residual2: return "Residual2";
    case SymmetryClass::PartialSym12: return "PartialSym12";
  }
  return "?";
}

namespace {

template <class F>
Tensor3 pointwise(const Tensor3& t, F&& f) {
  const std::size_t d = t.dim();
  Tensor3 out(d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) out.at(i, j, k) = f(i, j, k);
  return out;
}

template <class F>
bool all_indices(std::size_t d, F&& pred) {
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (!pred(i, j, k)) return false;
  return true;
}

const Rat kThird = Rat(1, 3);
const Rat kSixth = Rat(1, 6);

}  // namespace

Tensor3 sym_part(const Tensor3& t) {
  return pointwise(t, [&](auto i, auto j, auto k) -> Rat {
    return kSixth * (t.at(i, j, k) + t.at(j, k, i) + t.at(k, i, j) + t.at(j, i, k) +
                     t.at(k, j, i) + t.at(i, k, j));
  });
}

Tensor3 skew_part(const Tensor3& t) {
  return pointwise(t, [&](auto i, auto j, auto k) -> Rat {
    return kSixth * (t.at(i, j, k) + t.at(j, k, i) + t.at(k, i, j) - t.at(j, i, k) -
                     t.at(k, j, i) - t.at(i, k, j));
  });
}

Tensor3 residual_part(const Tensor3& t) {
  return pointwise(t, [&](auto i, auto j, auto k) -> Rat {
    return kThird * (2 * t.at(i, j, k) - t.at(j, k, i) - t.at(k, i, j));
  });
}

Tensor3 n1_part(const Tensor3& t) {
  return pointwise(t, [&](auto i, auto j, auto k) -> Rat {
    return kThird * (t.at(i, j, k) + t.at(j, i, k) - t.at(k, j, i) - t.at(k, i, j));
  });
}

Tensor3 n2_part(const Tensor3& t) {
  return pointwise(t, [&](auto i, auto j, auto k) -> Rat {
    return kThird * (t.at(i, j, k) - t.at(j, i, k) + t.at(k, j, i) - t.at(j, k, i));
  });
}

Decomposition decompose(const Tensor3& t) {
  return {sym_part(t), n1_part(t), n2_part(t), skew_part(t)};
}

bool is_symmetric(const Tensor3& t) {
  return all_indices(t.dim(), [&](auto i, auto j, auto k) {
    const Rat& v = t.at(i, j, k);
    return v == t.at(j, i, k) && v == t.at(i, k, j) && v == t.at(k, j, i);
  });
}

bool is_skew_symmetric(const Tensor3& t) {
  return all_indices(t.dim(), [&](auto i, auto j, auto k) {
    const Rat& v = t.at(i, j, k);
    return v == -t.at(j, i, k) && v == -t.at(i, k, j) && v == -t.at(k, j, i);
  });
}

bool in_NV(const Tensor3& t) {
  return all_indices(t.dim(), [&](auto i, auto j, auto k) {
    return sgn(t.at(i, j, k) + t.at(j, k, i) + t.at(k, i, j)) == 0;
  });
}

bool is_partially_symmetric_12(const Tensor3& t) {
  return all_indices(t.dim(), [&](auto i, auto j, auto k) { return t.at(i, j, k) == t.at(j, i, k); });
}

bool in_N1V(const Tensor3& t) { return in_NV(t) && is_partially_symmetric_12(t); }

bool in_N2V(const Tensor3& t) {
  return in_NV(t) &&
         all_indices(t.dim(), [&](auto i, auto j, auto k) { return t.at(i, j, k) == t.at(k, j, i); });
}

bool belongs_to(const Tensor3& t, SymmetryClass c) {
  switch (c) {
    case SymmetryClass::Symmetric: return is_symmetric(t);
    case SymmetryClass::SkewSymmetric: return is_skew_symmetric(t);
    case SymmetryClass::Residual: return in_NV(t);
    case SymmetryClass::Residual1: return in_N1V(t);
    case SymmetryClass::Residual2: return in_N2V(t);
    case SymmetryClass::PartialSym12: return is_partially_symmetric_12(t);
  }
  return false;
}

Tensor3 project(SymmetryClass c, const Tensor3& t) {
  switch (c) {
    case SymmetryClass::Symmetric: return sym_part(t);
    case SymmetryClass::SkewSymmetric: return skew_part(t);
    case SymmetryClass::Residual: return residual_part(t);
    case SymmetryClass::Residual1: return n1_part(t);
    case SymmetryClass::Residual2: return n2_part(t);
    case SymmetryClass::PartialSym12: break;
  }
  throw std::invalid_argument("no projector for class " + to_string(c));
}

std::vector<std::array<std::size_t, 3>> basis_index_triples(SymmetryClass c, std::size_t dim) {
  bool (*select)(std::size_t, std::size_t, std::size_t) = nullptr;
  switch (c) {
    case SymmetryClass::Symmetric:
      select = [](std::size_t i, std::size_t j, std::size_t k) { return j <= i && i <= k; };
      break;
    case SymmetryClass::SkewSymmetric:
      select = [](std::size_t i, std::size_t j, std::size_t k) { return j > i && i > k; };
      break;
    case SymmetryClass::Residual1:
      select = [](std::size_t i, std::size_t j, std::size_t k) { return j <= i && i > k; };
      break;
    case SymmetryClass::Residual2:
      select = [](std::size_t i, std::size_t j, std::size_t k) { return j > i && i <= k; };
      break;
    default:
      throw std::invalid_argument("basis() supports Symmetric, SkewSymmetric, Residual1, Residual2");
  }
  std::vector<std::array<std::size_t, 3>> out;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        if (select(i, j, k)) out.push_back({i, j, k});
  return out;
}

std::vector<Tensor3> basis(SymmetryClass c, std::size_t dim) {
  std::vector<Tensor3> out;
  for (const auto& [i, j, k] : basis_index_triples(c, dim))
    out.push_back(project(c, Tensor3::basis_element(dim, i, j, k)));
  return out;
}

std::size_t expected_dimension(SymmetryClass c, std::size_t dim) {
  auto binom3 = [](std::size_t m) { return m < 3 ? 0 : m * (m - 1) * (m - 2) / 6; };
  switch (c) {
    case SymmetryClass::Symmetric: return binom3(dim + 2);
    case SymmetryClass::SkewSymmetric: return binom3(dim);
    case SymmetryClass::Residual: return 4 * binom3(dim + 1);
    case SymmetryClass::Residual1:
    case SymmetryClass::Residual2: return 2 * binom3(dim + 1);
    case SymmetryClass::PartialSym12: return dim * dim * (dim + 1) / 2;
  }
  return 0;
}

RatMatrix projector_matrix(SymmetryClass c, std::size_t dim) {
  const std::size_t n = dim * dim * dim;
  RatMatrix m(n, n);
  std::size_t col = 0;
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j, ++col) {
        const Tensor3 img = project(c, Tensor3::basis_element(dim, i, j, k));
        for (std::size_t r = 0; r < n; ++r) m(r, col) = img.flat()[r];
      }
  return m;
}

Tensor3 restrict_n1(const Tensor3& t) {
  if (t.dim() < 2) throw std::invalid_argument("restriction needs dim >= 2");
  if (!in_N1V(t)) throw std::invalid_argument("restriction input is not cyclic-symmetric");
  const std::size_t n = t.dim() - 1;
  Tensor3 s(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s.at(i, j, k) = t.at(i, j, k);
  return s;
}

Tensor3 extend_n1(const Tensor3& s, const std::vector<std::vector<Rat>>& free) {
  if (!in_N1V(s)) throw std::invalid_argument("extension input is not cyclic-symmetric");
  const std::size_t n = s.dim();
  if (free.size() != n) throw std::invalid_argument("free entries need one row per face");
  for (const auto& row : free)
    if (row.size() != n + 1) throw std::invalid_argument("free entries need n + 1 values per face");

  Tensor3 t(n + 1);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t.at(i, j, k) = s.at(i, j, k);
    for (std::size_t i = 0; i < n; ++i) {
      t.at(i, n, k) = free[k][i];
      t.at(n, i, k) = free[k][i];
    }
    t.at(n, n, k) = 2 * free[k][n];
  }
  // last face from T_{ijn} = -(T_{jni} + T_{inj})
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.at(i, j, n) = -(free[i][j] + free[j][i]);
    t.at(i, n, n) = -free[i][n];
    t.at(n, i, n) = -free[i][n];
  }
  t.at(n, n, n) = 0;
  return t;
}

Tensor3 random_n1(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-9, 9);
  Tensor3 t(dim);
  for (const auto& b : basis(SymmetryClass::Residual1, dim)) t += Rat(coeff(rng)) * b;
  return t;
}

}  // namespace weddle
