#include "weddle/system.hpp"

#include <stdexcept>

namespace weddle {

void LinearSystem::validate() const {
  if (quadrics.size() != n + 1)
    throw std::invalid_argument("a linear system in P^n needs exactly n+1 quadrics");
  for (const auto& q : quadrics) {
    if (q.rows() != n + 1 || q.cols() != n + 1)
      throw std::invalid_argument("quadric matrices must be (n+1)x(n+1)");
    if (!q.is_symmetric()) throw std::invalid_argument("quadric matrices must be symmetric");
  }
}

LinearSystem LinearSystem::from_tensor(const Tensor3& t) {
  if (!is_partially_symmetric_12(t))
    throw std::invalid_argument("tensor is not partially symmetric in its first two indices");
  LinearSystem sys;
  sys.n = t.dim() - 1;
  for (std::size_t k = 0; k < t.dim(); ++k) sys.quadrics.push_back(t.face(k));
  return sys;
}

Tensor3 LinearSystem::to_tensor() const {
  validate();
  return Tensor3::from_faces(quadrics);
}

std::vector<MultiPoly> LinearSystem::polynomials() const {
  std::vector<MultiPoly> out;
  out.reserve(quadrics.size());
  for (const auto& q : quadrics) out.push_back(quadric_poly(q));
  return out;
}

MultiPoly quadric_poly(const RatMatrix& q) {
  if (!q.is_square()) throw std::invalid_argument("quadric matrix must be square");
  const std::size_t m = q.rows();
  MultiPoly p(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (sgn(q(i, j)) == 0) continue;
      Monomial mono(m);
      mono.exps[i] += 1;
      mono.exps[j] += 1;
      p.add_term(mono, q(i, j));
    }
  return p;
}

RatMatrix quadric_matrix(const MultiPoly& q) {
  if (!q.is_zero() && (q.total_degree() != 2 || !q.is_homogeneous()))
    throw std::invalid_argument("expected a homogeneous quadratic form");
  const std::size_t m = q.nvars();
  RatMatrix out(m, m);
  for (const auto& [mono, c] : q.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < m; ++i)
      for (int e = 0; e < mono.exps[i]; ++e) idx.push_back(i);
    if (idx[0] == idx[1]) {
      out(idx[0], idx[0]) = c;
    } else {
      out(idx[0], idx[1]) = c / 2;
      out(idx[1], idx[0]) = c / 2;
    }
  }
  return out;
}

}  // namespace weddle
