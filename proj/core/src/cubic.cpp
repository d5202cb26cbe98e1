#include "weddle/cubic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>

#include "weddle/linalg.hpp"
#include "weddle/weddle.hpp"

namespace weddle {

using cd = std::complex<double>;

namespace {

template <class T>
using Terms = std::vector<std::pair<T, std::array<int, 3>>>;
template <class T>
using Mat3 = std::array<std::array<T, 3>, 3>;

template <class T>
bool near_zero(const T& v) {
  if constexpr (std::is_same_v<T, Rat>) {
    return sgn(v) == 0;
  } else {
    return std::abs(v) < 1e-12;
  }
}

// c4, c6 after X = A y with A's columns (point on the tangent, flex, point off
// the tangent): the flex goes to [0:1:0] and the tangent to z = 0.
template <class T>
std::pair<T, T> long_invariants(const Terms<T>& f, const Mat3<T>& A) {
  T out[4][4][4];
  for (auto& p : out)
    for (auto& q : p)
      for (auto& r : q) r = T(0);
  for (const auto& [c, e] : f) {
    std::vector<int> vs;
    for (int v = 0; v < 3; ++v)
      for (int k = 0; k < e[v]; ++k) vs.push_back(v);
    if (vs.size() != 3) throw std::invalid_argument("expected a homogeneous cubic in three variables");
    for (int j1 = 0; j1 < 3; ++j1)
      for (int j2 = 0; j2 < 3; ++j2)
        for (int j3 = 0; j3 < 3; ++j3) {
          int ex[3] = {0, 0, 0};
          ++ex[j1];
          ++ex[j2];
          ++ex[j3];
          T term = c;
          term *= A[vs[0]][j1];
          term *= A[vs[1]][j2];
          term *= A[vs[2]][j3];
          out[ex[0]][ex[1]][ex[2]] += term;
        }
  }
  const T& cx3 = out[3][0][0];
  const T& alpha = out[0][2][1];
  const T& beta = out[1][1][1];
  const T& gam = out[0][1][2];
  const T& delta = out[2][0][1];
  const T& eps = out[1][0][2];
  const T& zeta = out[0][0][3];
  if (near_zero(alpha)) throw std::domain_error("flex is a singular point");
  if (near_zero(cx3)) throw std::domain_error("tangent line is a component of the cubic");
  if constexpr (std::is_same_v<T, Rat>) {
    if (sgn(out[2][1][0]) != 0 || sgn(out[1][2][0]) != 0 || sgn(out[0][3][0]) != 0)
      throw std::logic_error("point is not a flex");
  }
  const T k = -cx3 / alpha;
  const T a1 = beta / alpha;
  const T a2 = -delta / alpha;
  const T a3 = (gam / alpha) * k;
  const T a4 = (-eps / alpha) * k;
  const T a6 = (-zeta / alpha) * k * k;
  const T b2 = a1 * a1 + T(4) * a2;
  const T b4 = T(2) * a4 + a1 * a3;
  const T b6 = a3 * a3 + T(4) * a6;
  const T c4 = b2 * b2 - T(24) * b4;
  const T c6 = -b2 * b2 * b2 + T(36) * b2 * b4 - T(216) * b6;
  return {c4, c6};
}

template <class T>
Terms<T> cubic_terms(const MultiPoly& f) {
  if (f.nvars() != 3 || f.is_zero() || !f.is_homogeneous() || f.total_degree() != 3)
    throw std::invalid_argument("expected a homogeneous cubic in three variables");
  Terms<T> out;
  for (const auto& [m, c] : f.terms()) {
    if constexpr (std::is_same_v<T, Rat>) {
      out.push_back({c, {m.exps[0], m.exps[1], m.exps[2]}});
    } else {
      out.push_back({T(to_double(c)), {m.exps[0], m.exps[1], m.exps[2]}});
    }
  }
  return out;
}

cd eval_complex(const MultiPoly& p, const CPoint& x) {
  cd v = 0.0;
  for (const auto& [m, c] : p.terms()) {
    cd t = to_double(c);
    for (std::size_t i = 0; i < m.exps.size(); ++i) t *= std::pow(x[i], m.exps[i]);
    v += t;
  }
  return v;
}

double coeff_norm(const MultiPoly& p) {
  double s = 0.0;
  for (const auto& [m, c] : p.terms()) s += to_double(c) * to_double(c);
  return std::sqrt(s);
}

template <class T>
std::array<T, 3> cross(const std::array<T, 3>& u, const std::array<T, 3>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

// valuations and factoring for the minimal-model scaling
int valuation(BigInt n, const BigInt& p) {
  if (n == 0) return 1 << 20;
  int v = 0;
  n = abs(n);
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

int valuation(const Rat& r, const BigInt& p) {
  if (sgn(r) == 0) return 1 << 20;
  return valuation(BigInt(r.get_num()), p) - valuation(BigInt(r.get_den()), p);
}

BigInt rho_divisor(const BigInt& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    BigInt x = 2, y = 2, d = 1;
    auto step = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      d = gcd(BigInt(abs(x - y)), n);
    }
    if (d != n) return d;
  }
}

void factor_into(BigInt n, std::map<BigInt, int>& out) {
  n = abs(n);
  for (unsigned long p = 2; p < 1000 && n > 1; ++p)
    while (n % p == 0) {
      out[BigInt(p)]++;
      n /= p;
    }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    out[n]++;
    return;
  }
  const BigInt d = rho_divisor(n);
  factor_into(d, out);
  factor_into(BigInt(n / d), out);
}

Rat rat_pow(const BigInt& p, int e) {
  BigInt r = 1;
  for (int i = 0; i < std::abs(e); ++i) r *= p;
  return e >= 0 ? Rat(r) : Rat(BigInt(1), r);
}

bool kraus_local(const Rat& c4, const Rat& c6, const BigInt& p) {
  if (valuation(c4, p) < 0 || valuation(c6, p) < 0) return false;
  const Rat disc = c4 * c4 * c4 - c6 * c6;
  if (p == 2) {
    if (valuation(disc, p) < 6) return false;
    // residue mod 32 of the 2-integral c6; odd denominators are invertible
    const BigInt den = BigInt(c6.get_den());
    const BigInt m32 = 32;
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m32.get_mpz_t());
    BigInt r = (BigInt(c6.get_num()) * inv) % 32;
    if (r < 0) r += 32;
    if (r % 4 == 3) return true;
    return valuation(c4, p) >= 4 && (r == 0 || r == 8);
  }
  if (p == 3) {
    if (valuation(disc, p) < 3) return false;
    return valuation(c6, p) != 2;
  }
  return true;
}

}  // namespace

Rat j_short(const ShortWeierstrass& w) {
  const Rat a3 = w.a * w.a * w.a;
  const Rat denom = 4 * a3 + 27 * w.b * w.b;
  if (sgn(denom) == 0) throw std::domain_error("singular Weierstrass curve");
  return Rat(6912 * a3 / denom);
}

PolyMatrix hessian(const MultiPoly& f) {
  if (f.is_zero() || !f.is_homogeneous() || f.total_degree() != 3)
    throw std::invalid_argument("Hessian expects a homogeneous cubic");
  return hessian_matrix(f);
}

Smoothness is_smooth_cubic(const MultiPoly& f, const SolverConfig& cfg) {
  if (f.nvars() != 3 || f.is_zero() || !f.is_homogeneous() || f.total_degree() != 3)
    throw std::invalid_argument("expected a nonzero ternary cubic");
  const SolutionSet s = singular_points(f, cfg);
  for (const auto& c : s.clusters)
    if (c.rational_match && singular_at(f, *c.rational_match)) return Smoothness::Singular;
  if (!s.certified) return Smoothness::Indeterminate;
  return s.count() == 0 ? Smoothness::Smooth : Smoothness::Singular;
}

std::pair<Rat, Rat> flex_invariants(const MultiPoly& f, const std::vector<Rat>& flex) {
  const auto terms = cubic_terms<Rat>(f);
  std::array<Rat, 3> P{flex[0], flex[1], flex[2]};
  std::array<Rat, 3> t;
  const auto g = gradient(f);
  for (int i = 0; i < 3; ++i) t[i] = evaluate(g[i], flex);
  if (sgn(t[0]) == 0 && sgn(t[1]) == 0 && sgn(t[2]) == 0) throw std::domain_error("flex is a singular point");
  // second point on the tangent line, and a point off it
  std::array<Rat, 3> Q;
  for (int k = 0; k < 3; ++k) {
    std::array<Rat, 3> e{0, 0, 0};
    e[k] = 1;
    Q = cross(t, e);
    const auto c = cross(Q, P);
    if (sgn(c[0]) != 0 || sgn(c[1]) != 0 || sgn(c[2]) != 0) break;
  }
  int off = 0;
  for (int k = 0; k < 3; ++k)
    if (sgn(t[k]) != 0) {
      off = k;
      break;
    }
  Mat3<Rat> A;
  for (int v = 0; v < 3; ++v) {
    A[v][0] = Q[v];
    A[v][1] = P[v];
    A[v][2] = v == off ? 1 : 0;
  }
  return long_invariants<Rat>(terms, A);
}

ShortWeierstrass canonical_short_form(const Rat& c4_in, const Rat& c6_in) {
  Rat c4 = c4_in, c6 = c6_in;
  if (sgn(c4 * c4 * c4 - c6 * c6) == 0) throw std::domain_error("singular curve");
  std::map<BigInt, int> primes;
  primes[2] = 1;
  primes[3] = 1;
  BigInt g;
  if (sgn(c4) != 0 && sgn(c6) != 0)
    g = gcd(BigInt(c4.get_num()), BigInt(c6.get_num()));
  else
    g = sgn(c4) != 0 ? BigInt(c4.get_num()) : BigInt(c6.get_num());
  factor_into(g, primes);
  factor_into(BigInt(c4.get_den()), primes);
  factor_into(BigInt(c6.get_den()), primes);

  for (const auto& [p, unused] : primes) {
    (void)unused;
    if (p < 2) continue;
    auto ceil_div = [](int a, int b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); };
    int e = -(1 << 18);
    if (sgn(c4) != 0) e = std::max(e, ceil_div(-valuation(c4, p), 4));
    if (sgn(c6) != 0) e = std::max(e, ceil_div(-valuation(c6, p), 6));
    while (true) {
      const Rat u = rat_pow(p, e);
      const Rat u2 = u * u;
      const Rat t4 = c4 * u2 * u2;
      const Rat t6 = c6 * u2 * u2 * u2;
      if (kraus_local(t4, t6, p)) {
        c4 = t4;
        c6 = t6;
        break;
      }
      ++e;
    }
  }
  return {Rat(-c4 / 48), Rat(-c6 / 864)};
}

ShortWeierstrass canonical_short_form(const ShortWeierstrass& w) {
  return canonical_short_form(Rat(-48 * w.a), Rat(-864 * w.b));
}

std::vector<std::vector<Rat>> rational_flexes(const MultiPoly& f, int height) {
  const MultiPoly hd = det(hessian(f));
  const auto g = gradient(f);
  std::vector<std::array<int, 3>> cands;
  for (int x = -height; x <= height; ++x)
    for (int y = -height; y <= height; ++y)
      for (int z = -height; z <= height; ++z) {
        const std::array<int, 3> v{x, y, z};
        if (x == 0 && y == 0 && z == 0) continue;
        if (std::gcd(std::gcd(std::abs(x), std::abs(y)), std::abs(z)) != 1) continue;
        const int first = x != 0 ? x : (y != 0 ? y : z);
        if (first < 0) continue;
        cands.push_back(v);
      }
  std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
    auto h = [](const auto& v) { return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])}); };
    if (h(a) != h(b)) return h(a) < h(b);
    return a < b;
  });
  std::vector<std::vector<Rat>> out;
  for (const auto& c : cands) {
    const std::vector<Rat> p{c[0], c[1], c[2]};
    if (sgn(evaluate(f, p)) != 0 || sgn(evaluate(hd, p)) != 0) continue;
    bool smooth = false;
    for (const auto& gi : g)
      if (sgn(evaluate(gi, p)) != 0) smooth = true;
    if (smooth) out.push_back(p);
  }
  return out;
}

WeierstrassResult weierstrass_reduce(const MultiPoly& f, const SolverConfig& cfg, bool force_numeric) {
  (void)cubic_terms<Rat>(f);
  const MultiPoly hd = det(hessian(f));
  if (hd.is_zero()) throw std::domain_error("Hessian vanishes identically");

  auto exact_from = [&](const std::vector<Rat>& p) -> std::optional<WeierstrassResult> {
    try {
      const auto [c4, c6] = flex_invariants(f, p);
      WeierstrassResult r;
      r.exact = true;
      r.flex = p;
      r.form = canonical_short_form(c4, c6);
      r.a_num = to_double(r.form->a);
      r.b_num = to_double(r.form->b);
      r.certified = true;
      return r;
    } catch (const std::domain_error& e) {
      if (std::string(e.what()) == "singular curve") throw;
      return std::nullopt;
    }
  };

  if (!force_numeric)
    for (const auto& p : rational_flexes(f))
      if (auto r = exact_from(p)) return *r;

  const SolutionSet flexes = projective_solve({f, hd}, cfg);
  if (flexes.count() == 0) throw std::runtime_error("no flex found");

  if (!force_numeric) {
    for (const auto& c : flexes.clusters) {
      CPoint q = c.point;
      std::size_t imax = 0;
      for (std::size_t i = 1; i < 3; ++i)
        if (std::abs(q[i]) > std::abs(q[imax])) imax = i;
      const cd s = q[imax];
      std::vector<Rat> p;
      for (auto& z : q) {
        z /= s;
        if (std::abs(z.imag()) > 1e-9) break;
        auto r = reconstruct_rational(z.real(), 1000000, 1e-10);
        if (!r) break;
        p.push_back(*r);
      }
      if (p.size() != 3 || sgn(evaluate(f, p)) != 0 || sgn(evaluate(hd, p)) != 0) continue;
      if (auto r = exact_from(p)) return *r;
    }
  }

  const auto terms = cubic_terms<cd>(f);
  for (const auto& c : flexes.clusters) {
    const CPoint& x = c.point;
    std::array<cd, 3> P{x[0], x[1], x[2]};
    std::array<cd, 3> t;
    const auto g = gradient(f);
    for (int i = 0; i < 3; ++i) t[i] = eval_complex(g[i], x);
    std::array<cd, 3> Q{};
    double best = -1.0;
    for (int k = 0; k < 3; ++k) {
      std::array<cd, 3> e{0.0, 0.0, 0.0};
      e[k] = 1.0;
      const auto cand = cross(t, e);
      const auto w = cross(cand, P);
      const double score = std::abs(w[0]) + std::abs(w[1]) + std::abs(w[2]);
      if (score > best) {
        best = score;
        Q = cand;
      }
    }
    int off = 0;
    for (int k = 1; k < 3; ++k)
      if (std::abs(t[k]) > std::abs(t[off])) off = k;
    Mat3<cd> A;
    for (int v = 0; v < 3; ++v) {
      A[v][0] = Q[v];
      A[v][1] = P[v];
      A[v][2] = v == off ? 1.0 : 0.0;
    }
    try {
      const auto [c4, c6] = long_invariants<cd>(terms, A);
      WeierstrassResult r;
      r.a_num = -c4 / 48.0;
      r.b_num = -c6 / 864.0;
      r.flex_num = x;
      r.flex_residual = std::max(std::abs(eval_complex(f, x)) / coeff_norm(f), std::abs(eval_complex(hd, x)) / coeff_norm(hd));
      r.certified = flexes.certified;
      return r;
    } catch (const std::domain_error&) {
      continue;
    }
  }
  throw std::runtime_error("no usable flex found");
}

JInvariant j_invariant(const MultiPoly& f, const SolverConfig& cfg, bool force_numeric) {
  const WeierstrassResult w = weierstrass_reduce(f, cfg, force_numeric);
  JInvariant out;
  out.certified = w.certified;
  out.flex_residual = w.flex_residual;
  if (w.exact) {
    out.exact = true;
    out.value = j_short(*w.form);
    out.numeric = to_double(out.value);
    return out;
  }
  const cd a3 = w.a_num * w.a_num * w.a_num;
  const cd denom = 4.0 * a3 + 27.0 * w.b_num * w.b_num;
  if (std::abs(denom) < 1e-300) throw std::domain_error("singular Weierstrass curve");
  out.numeric = 6912.0 * a3 / denom;
  return out;
}

}  // namespace weddle
