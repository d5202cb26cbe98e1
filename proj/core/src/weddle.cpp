#include "weddle/weddle.hpp"

#include <algorithm>
#include <stdexcept>

namespace weddle {

namespace {

MultiPoly xvar(std::size_t nv, std::size_t i) { return MultiPoly::variable(nv, i); }

bool is_zero_point(const RatPoint& p) {
  return std::all_of(p.begin(), p.end(), [](const Rat& r) { return sgn(r) == 0; });
}

// ordered subsets of {0..m-1} of size k
void for_each_subset(std::size_t m, std::size_t k, const auto& body) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > m) return;
  while (true) {
    body(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

PolyMatrix contraction_matrix(const LinearSystem& sys) {
  sys.validate();
  const std::size_t m = sys.nvars();
  PolyMatrix c(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      MultiPoly e(m);
      for (std::size_t j = 0; j < m; ++j)
        if (sgn(sys.quadrics[k](i, j)) != 0) e += sys.quadrics[k](i, j) * xvar(m, j);
      c(i, k) = e;
    }
  return c;
}

PolyMatrix gradient_matrix(const LinearSystem& sys) {
  sys.validate();
  const std::size_t m = sys.nvars();
  const auto polys = sys.polynomials();
  PolyMatrix g(m, m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i) g(i, k) = differentiate(polys[k], i);
  return g;
}

WeddleData weddle_matrix(const LinearSystem& sys) {
  WeddleData out;
  out.matrix = contraction_matrix(sys);
  if (!(gradient_matrix(sys) == out.matrix.scaled(2)))
    throw std::logic_error("gradient matrix differs from twice the contraction");
  out.determinant = det(out.matrix);
  out.polynomial = normalize_up_to_scalar(out.determinant);
  out.degenerate = out.determinant.is_zero();
  return out;
}

bool singular_at(const MultiPoly& f, const RatPoint& p) {
  if (p.size() != f.nvars()) throw std::invalid_argument("point has the wrong number of coordinates");
  if (is_zero_point(p)) throw std::invalid_argument("the zero vector is not a projective point");
  for (const auto& g : gradient(f))
    if (sgn(evaluate(g, p)) != 0) return false;
  return true;
}

bool is_base_point(const LinearSystem& sys, const RatPoint& p) {
  if (p.size() != sys.nvars()) throw std::invalid_argument("point has the wrong number of coordinates");
  if (is_zero_point(p)) throw std::invalid_argument("the zero vector is not a projective point");
  for (const auto& q : sys.polynomials())
    if (sgn(evaluate(q, p)) != 0) return false;
  return true;
}

bool base_point_theorem_check(const LinearSystem& sys, const RatPoint& p) {
  if (!is_base_point(sys, p)) throw std::invalid_argument("not a base point of the system");
  return singular_at(weddle_matrix(sys).polynomial, p);
}

MultiPoly cyclic_relation_check(const LinearSystem& sys) {
  sys.validate();
  const std::size_t m = sys.nvars();
  const auto polys = sys.polynomials();
  MultiPoly out(m);
  for (std::size_t k = 0; k < m; ++k) out += xvar(m, k) * polys[k];
  return out;
}

std::vector<RatMatrix> quadrics_through_points(const std::vector<RatPoint>& points, std::size_t n) {
  const std::size_t m = n + 1;
  // graded-lex order on degree-2 monomials: x_i x_j with i <= j, i then j ascending
  std::vector<std::pair<std::size_t, std::size_t>> monos;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) monos.emplace_back(i, j);

  RatMatrix eval(points.size(), monos.size());
  for (std::size_t r = 0; r < points.size(); ++r) {
    if (points[r].size() != m) throw std::invalid_argument("point has the wrong number of coordinates");
    for (std::size_t c = 0; c < monos.size(); ++c)
      eval(r, c) = points[r][monos[c].first] * points[r][monos[c].second];
  }
  std::vector<RatMatrix> out;
  const auto kernel = points.empty() ? std::vector<std::vector<Rat>>{} : nullspace(eval);
  auto to_matrix = [&](const std::vector<Rat>& v) {
    RatMatrix q(m, m);
    for (std::size_t c = 0; c < monos.size(); ++c) {
      const auto [i, j] = monos[c];
      if (i == j) {
        q(i, i) = v[c];
      } else {
        q(i, j) = v[c] / 2;
        q(j, i) = v[c] / 2;
      }
    }
    return q;
  };
  if (points.empty()) {
    for (std::size_t c = 0; c < monos.size(); ++c) {
      std::vector<Rat> v(monos.size());
      v[c] = 1;
      out.push_back(to_matrix(v));
    }
    return out;
  }
  for (const auto& v : kernel) out.push_back(to_matrix(v));
  return out;
}

LinearSystem rank_r_system(const std::vector<MultiPoly>& forms, const RatMatrix& coeffs) {
  if (forms.empty()) throw std::invalid_argument("need at least one linear form");
  const std::size_t m = forms.front().nvars();
  if (coeffs.rows() != m) throw std::invalid_argument("coefficient matrix needs n+1 rows");
  if (coeffs.cols() != forms.size()) throw std::invalid_argument("coefficient matrix needs one column per form");
  std::vector<std::vector<Rat>> ls;
  for (const auto& f : forms) {
    if (f.nvars() != m) throw std::invalid_argument("linear forms live in different rings");
    ls.push_back(f.linear_coefficients());
  }
  LinearSystem sys;
  sys.n = m - 1;
  for (std::size_t k = 0; k < m; ++k) {
    RatMatrix q(m, m);
    for (std::size_t r = 0; r < forms.size(); ++r) {
      if (sgn(coeffs(k, r)) == 0) continue;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) q(i, j) += coeffs(k, r) * ls[r][i] * ls[r][j];
    }
    sys.quadrics.push_back(q);
  }
  return sys;
}

LinearSystem rank5_system(const RatMatrix& M) {
  if (M.rows() != 4 || M.cols() != 4) throw std::invalid_argument("rank-5 construction needs a 4x4 matrix");
  std::vector<MultiPoly> forms;
  for (std::size_t i = 0; i < 4; ++i) forms.push_back(xvar(4, i));
  forms.push_back(MultiPoly::linear_form({1, 1, 1, 1}));
  RatMatrix coeffs(4, 5);
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t i = 0; i < 4; ++i) coeffs(k, i) = M(i, k);
    coeffs(k, 4) = 1;
  }
  return rank_r_system(forms, coeffs);
}

Rank5Data mu_invariants(const RatMatrix& M) {
  if (M.rows() != 4 || M.cols() != 4) throw std::invalid_argument("mu invariants need a 4x4 matrix");
  Rank5Data out{M, determinant(M), {}};
  for (std::size_t s = 0; s < 4; ++s) {
    RatMatrix r = M;
    for (std::size_t j = 0; j < 4; ++j) r(s, j) = 1;
    out.mu[s] = determinant(r);
  }
  return out;
}

MultiPoly rank5_determinant(const RatMatrix& M) {
  const MultiPoly xi = MultiPoly::linear_form({1, 1, 1, 1});
  PolyMatrix p(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) p(i, j) = xi + M(i, j) * xvar(4, i);
  return det(p);
}

MultiPoly rank5_column_expansion(const RatMatrix& M) {
  const MultiPoly xi = MultiPoly::linear_form({1, 1, 1, 1});
  PolyMatrix dm(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) dm(i, j) = M(i, j) * xvar(4, i);
  MultiPoly total = det(dm);
  for (std::size_t l = 0; l < 4; ++l) {
    PolyMatrix r = dm;
    for (std::size_t i = 0; i < 4; ++i) r(i, l) = xi;
    total += det(r);
  }
  return total;
}

MultiPoly rank5_closed_form(const Rank5Data& data) {
  MultiPoly f(4);
  Rat lead = data.detM;
  for (const auto& m : data.mu) lead += m;
  f.add_term(Monomial(std::vector<int>{1, 1, 1, 1}), lead);
  for_each_subset(4, 3, [&](const std::vector<std::size_t>& t) {
    std::size_t s = 0;
    while (std::find(t.begin(), t.end(), s) != t.end()) ++s;
    for (std::size_t sq : t) {
      Monomial mono(4);
      for (std::size_t v : t) mono.exps[v] = 1;
      mono.exps[sq] = 2;
      f.add_term(mono, data.mu[s]);
    }
  });
  return f;
}

bool rank5_identity_check(const RatMatrix& M) {
  const MultiPoly direct = rank5_determinant(M);
  return direct == rank5_column_expansion(M) && direct == rank5_closed_form(mu_invariants(M));
}

std::vector<RatPoint> rank5_special_points() {
  std::vector<RatPoint> pts;
  for (std::size_t i = 0; i < 4; ++i) {
    RatPoint p(4);
    p[i] = 1;
    pts.push_back(p);
  }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      RatPoint p(4);
      p[i] = 1;
      p[j] = -1;
      pts.push_back(p);
    }
  return pts;
}

RankCertificate rank_lower_bound_certificate(const LinearSystem& sys, const SolverConfig& cfg) {
  if (sys.n != 3) throw std::invalid_argument("rank certificates are for systems in P^3");
  const WeddleData w = weddle_matrix(sys);
  if (w.degenerate) throw std::invalid_argument("Weddle polynomial vanishes identically");
  RankCertificate out;
  out.evidence = singular_points(w.polynomial, cfg);
  out.singular_count = out.evidence.count();
  out.count_certified = out.evidence.certified;
  out.conclusion = out.count_certified && out.singular_count < 10 ? RankConclusion::RankAtLeast6
                                                                  : RankConclusion::Inconclusive;
  return out;
}

std::optional<std::vector<MultiPoly>> splits_into_hyperplanes(const MultiPoly& f,
                                                              const std::vector<RatPoint>& singular_pts) {
  if (f.is_zero() || !f.is_homogeneous()) return std::nullopt;
  const std::size_t m = f.nvars();
  const std::size_t n = m - 1;
  if (n == 0) return std::nullopt;

  std::vector<MultiPoly> candidates;
  for_each_subset(singular_pts.size(), n, [&](const std::vector<std::size_t>& idx) {
    RatMatrix a(n, m);
    for (std::size_t r = 0; r < n; ++r) {
      if (singular_pts[idx[r]].size() != m) throw std::invalid_argument("point has the wrong number of coordinates");
      for (std::size_t c = 0; c < m; ++c) a(r, c) = singular_pts[idx[r]][c];
    }
    const auto ker = nullspace(a);
    if (ker.size() != 1) return;
    const MultiPoly l = normalize_up_to_scalar(MultiPoly::linear_form(ker[0]));
    if (std::find(candidates.begin(), candidates.end(), l) == candidates.end()) candidates.push_back(l);
  });

  std::vector<MultiPoly> factors;
  MultiPoly g = f;
  bool progress = true;
  while (g.total_degree() > 0 && progress) {
    progress = false;
    for (const auto& l : candidates) {
      if (auto q = divides(l, g)) {
        factors.push_back(l);
        g = *q;
        progress = true;
        break;
      }
    }
  }
  if (g.total_degree() != 0) return std::nullopt;
  std::sort(factors.begin(), factors.end(), [](const MultiPoly& a, const MultiPoly& b) {
    const auto& ma = a.terms().begin()->first;
    const auto& mb = b.terms().begin()->first;
    if (!(ma == mb)) return GrlexDescending{}(ma, mb);
    return to_string(a) < to_string(b);
  });
  return factors;
}

LinearSystem partials_system(const MultiPoly& f) {
  if (f.is_zero() || !f.is_homogeneous() || f.total_degree() != 3)
    throw std::invalid_argument("expected a homogeneous cubic");
  LinearSystem sys;
  sys.n = f.nvars() - 1;
  for (const auto& g : gradient(f)) sys.quadrics.push_back(quadric_matrix(g));
  return sys;
}

bool hessian_equals_weddle_check(const MultiPoly& f) {
  const LinearSystem sys = partials_system(f);
  return weddle_matrix(sys).matrix.scaled(2) == hessian_matrix(f);
}

}  // namespace weddle
