#include "weddle/polymatrix.hpp"

#include <stdexcept>
#include <unordered_map>

namespace weddle {

PolyMatrix::PolyMatrix(std::size_t size, std::size_t nvars)
    : size_(size), nvars_(nvars), entries_(size * size, MultiPoly(nvars)) {}

bool PolyMatrix::entries_are_linear_forms() const {
  for (const auto& e : entries_)
    if (!e.is_zero() && (e.total_degree() != 1 || !e.is_homogeneous())) return false;
  return true;
}

bool PolyMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = i + 1; j < size_; ++j)
      if (!((*this)(i, j) == (*this)(j, i))) return false;
  return true;
}

PolyMatrix PolyMatrix::scaled(const Rat& c) const {
  PolyMatrix out(*this);
  for (auto& e : out.entries_) e *= c;
  return out;
}

Rat PolyMatrix::evaluate_entry(std::size_t i, std::size_t j, const std::vector<Rat>& pt) const {
  return evaluate((*this)(i, j), pt);
}

bool PolyMatrix::operator==(const PolyMatrix& other) const {
  return size_ == other.size_ && nvars_ == other.nvars_ && entries_ == other.entries_;
}

MultiPoly det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n > PolyMatrix::kMaxDetSize)
    throw std::invalid_argument("polynomial determinant limited to size 8");
  if (n == 0) return MultiPoly::constant(m.nvars(), Rat(1));

  // minor(mask) = det of rows [n - popcount(mask), n) restricted to columns in mask
  std::unordered_map<unsigned, MultiPoly> memo;
  auto minor = [&](auto&& self, unsigned mask) -> MultiPoly {
    if (mask == 0) return MultiPoly::constant(m.nvars(), Rat(1));
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const std::size_t row = n - static_cast<std::size_t>(__builtin_popcount(mask));
    MultiPoly acc(m.nvars());
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (1U << c))) continue;
      const MultiPoly& entry = m(row, c);
      if (!entry.is_zero()) {
        MultiPoly sub = self(self, mask & ~(1U << c));
        if (!sub.is_zero()) {
          if (sign > 0)
            acc += entry * sub;
          else
            acc -= entry * sub;
        }
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return minor(minor, (1U << n) - 1U);
}

PolyMatrix hessian_matrix(const MultiPoly& p) {
  const std::size_t n = p.nvars();
  PolyMatrix h(n, n);
  const auto grad = gradient(p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = differentiate(grad[i], j);
  return h;
}

}  // namespace weddle
