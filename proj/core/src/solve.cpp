#include "weddle/solve.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include "weddle/linalg.hpp"

namespace weddle {

using cd = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

namespace {

constexpr double kInfinityTol = 1e-7;
constexpr double kAmbiguousResidual = 1e-4;
constexpr double kRankTol = 1e-7;
constexpr double kEndgameStart = 1e-4;

struct NumPoly {
  std::vector<cd> coef;
  std::vector<std::vector<int>> exps;
  int degree = 0;
  double norm = 0.0;
};

NumPoly to_num(const MultiPoly& p, bool homogenize) {
  NumPoly out;
  out.degree = p.total_degree();
  double sq = 0.0;
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e;
    if (homogenize) e.push_back(out.degree - m.degree());
    e.insert(e.end(), m.exps.begin(), m.exps.end());
    const double v = to_double(c);
    out.exps.push_back(std::move(e));
    out.coef.emplace_back(v, 0.0);
    sq += v * v;
  }
  out.norm = std::sqrt(sq);
  return out;
}

// value, and gradient into grad when given
cd eval_num(const NumPoly& p, const CVec& z, CVec* grad) {
  const std::size_t nv = static_cast<std::size_t>(z.size());
  const int d = std::max(p.degree, 0);
  std::vector<cd> pw(nv * (d + 1));
  for (std::size_t v = 0; v < nv; ++v) {
    pw[v * (d + 1)] = 1.0;
    for (int e = 1; e <= d; ++e) pw[v * (d + 1) + e] = pw[v * (d + 1) + e - 1] * z[v];
  }
  auto power = [&](std::size_t v, int e) { return pw[v * (d + 1) + e]; };
  if (grad) grad->setZero(nv);
  cd val = 0.0;
  for (std::size_t t = 0; t < p.coef.size(); ++t) {
    const auto& e = p.exps[t];
    cd mono = p.coef[t];
    for (std::size_t v = 0; v < nv; ++v) mono *= power(v, e[v]);
    val += mono;
    if (!grad) continue;
    for (std::size_t v = 0; v < nv; ++v) {
      if (e[v] == 0) continue;
      cd g = p.coef[t] * static_cast<double>(e[v]) * power(v, e[v] - 1);
      for (std::size_t u = 0; u < nv; ++u)
        if (u != v) g *= power(u, e[u]);
      (*grad)[v] += g;
    }
  }
  return val;
}

struct Homotopy {
  std::size_t n = 0;
  std::vector<NumPoly> target;  // homogenized, variable 0 is the new one
  std::vector<int> degrees;
  std::vector<cd> start_roots;
  cd gamma;
  CVec patch;

  void eval(const CVec& z, double t, CVec& h, CMat& jz, CVec* ht) const {
    const std::size_t N = n + 1;
    h.resize(N);
    jz.resize(N, N);
    if (ht) ht->resize(N);
    CVec gf(N);
    for (std::size_t i = 0; i < n; ++i) {
      const cd f = eval_num(target[i], z, &gf);
      const int d = degrees[i];
      const cd zi = std::pow(z[i + 1], d - 1);
      const cd z0 = std::pow(z[0], d - 1);
      const cd g = zi * z[i + 1] - start_roots[i] * z0 * z[0];
      h[i] = (1.0 - t) * f + gamma * t * g;
      for (std::size_t v = 0; v < N; ++v) jz(i, v) = (1.0 - t) * gf[v];
      jz(i, i + 1) += gamma * t * static_cast<double>(d) * zi;
      jz(i, 0) -= gamma * t * static_cast<double>(d) * start_roots[i] * z0;
      if (ht) (*ht)[i] = gamma * g - f;
    }
    h[n] = patch.dot(z) - 1.0;  // dot() conjugates the first argument
    for (std::size_t v = 0; v < N; ++v) jz(n, v) = std::conj(patch[v]);
    if (ht) (*ht)[n] = 0.0;
  }
};

enum class PathStatus { Finite, Infinite, Failed };

struct PathEnd {
  PathStatus status = PathStatus::Failed;
  CVec z;
};

PathEnd track(const Homotopy& H, CVec z, const SolverConfig& cfg) {
  const std::size_t N = H.n + 1;
  CVec h(N), ht(N);
  CMat J(N, N);

  auto velocity = [&](const CVec& zz, double tt, CVec& out) {
    H.eval(zz, tt, h, J, &ht);
    out = -Eigen::PartialPivLU<CMat>(J).solve(ht);
    return out.allFinite();
  };
  auto correct = [&](CVec& zz, double tt) {
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 3; ++k) {
      H.eval(zz, tt, h, J, nullptr);
      const CVec dz = -Eigen::PartialPivLU<CMat>(J).solve(h);
      if (!dz.allFinite()) return false;
      const double nd = dz.norm();
      if (nd > 0.5 * prev) return false;
      if (k == 0 && nd > 0.05 * (1.0 + zz.norm())) return false;
      zz += dz;
      if (nd <= cfg.track_tol * (1.0 + zz.norm())) return true;
      prev = nd;
    }
    return false;
  };

  double t = 1.0;
  double step = 0.02;
  int streak = 0;
  CVec k1, k2, k3, k4;
  for (int iter = 0; t > kEndgameStart; ++iter) {
    if (iter > 100000) return {};
    const double t_new = std::max(t - step, kEndgameStart);
    const double dt = t_new - t;
    bool ok = velocity(z, t, k1) && velocity(z + 0.5 * dt * k1, t + 0.5 * dt, k2) &&
              velocity(z + 0.5 * dt * k2, t + 0.5 * dt, k3) && velocity(z + dt * k3, t_new, k4);
    CVec zp;
    if (ok) {
      zp = z + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      ok = correct(zp, t_new);
    }
    if (ok) {
      z = zp;
      t = t_new;
      if (++streak >= 4) {
        step = std::min(step * 1.25, 0.1);
        streak = 0;
      }
    } else {
      step *= 0.5;
      streak = 0;
      if (step < 1e-13) return {};
    }
  }

  // endgame: plain Newton on the target, keeping the best iterate
  CVec best = z;
  double best_res = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 100; ++k) {
    H.eval(z, 0.0, h, J, nullptr);
    const double res = h.norm();
    if (res < best_res) {
      best_res = res;
      best = z;
    }
    const CVec dz = -Eigen::PartialPivLU<CMat>(J).solve(h);
    if (!dz.allFinite()) break;
    z += dz;
    if (dz.norm() <= 1e-14 * (1.0 + z.norm())) {
      H.eval(z, 0.0, h, J, nullptr);
      if (h.norm() < best_res) best = z;
      break;
    }
  }
  if (!best.allFinite()) return {};
  PathEnd end;
  end.z = best;
  end.status = std::abs(best[0]) < kInfinityTol * best.norm() ? PathStatus::Infinite : PathStatus::Finite;
  return end;
}

template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += threads) body(i);
    });
  for (auto& th : pool) th.join();
}

cd unit_complex(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  return std::polar(1.0, angle(rng));
}

bool point_less(const CPoint& a, const CPoint& b) {
  constexpr double eps = 1e-7;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (std::abs(a[i].real() - b[i].real()) > eps) return a[i].real() < b[i].real();
    if (std::abs(a[i].imag() - b[i].imag()) > eps) return a[i].imag() < b[i].imag();
  }
  return false;
}

void sort_clusters(std::vector<Cluster>& cs) {
  std::stable_sort(cs.begin(), cs.end(), [](const Cluster& a, const Cluster& b) { return point_less(a.point, b.point); });
}

double affine_distance(const CPoint& a, const CPoint& b) {
  double sq = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sq += std::norm(a[i] - b[i]);
  return std::sqrt(sq);
}

double cpoint_norm(const CPoint& a) {
  double sq = 0.0;
  for (const auto& c : a) sq += std::norm(c);
  return std::sqrt(sq);
}

CVec to_vec(const CPoint& p) {
  CVec v(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) v[i] = p[i];
  return v;
}

// Nearby small-height rational point, scaled so the largest coordinate is 1
// (projective) or taken as is (affine).
std::optional<std::vector<Rat>> nearby_rational(const CPoint& p, bool projective, const SolverConfig& cfg) {
  CPoint q = p;
  if (projective) {
    std::size_t imax = 0;
    for (std::size_t i = 1; i < q.size(); ++i)
      if (std::abs(q[i]) > std::abs(q[imax])) imax = i;
    const cd s = q[imax];
    if (std::abs(s) == 0.0) return std::nullopt;
    for (auto& c : q) c /= s;
  }
  std::vector<Rat> out;
  for (const auto& c : q) {
    if (std::abs(c.imag()) > cfg.cluster_radius) return std::nullopt;
    auto r = reconstruct_rational(c.real(), cfg.rational_height, cfg.cluster_radius);
    if (!r) return std::nullopt;
    out.push_back(*r);
  }
  return out;
}

// Attach exact rational matches; false when a nearby rational point fails
// the exact check.
bool rational_cross_check(std::vector<Cluster>& clusters, const std::vector<MultiPoly>& eqs, bool projective,
                          const SolverConfig& cfg, std::vector<std::string>& notes) {
  bool ok = true;
  for (auto& c : clusters) {
    auto r = nearby_rational(c.point, projective, cfg);
    if (!r) continue;
    bool vanishes = true;
    for (const auto& e : eqs)
      if (sgn(evaluate(e, *r)) != 0) vanishes = false;
    if (!vanishes) {
      ok = false;
      notes.push_back("rational cross-check failed near a computed solution");
      continue;
    }
    if (projective) {
      std::vector<Rat> prim;
      for (const auto& z : primitive_integer_vector(*r)) prim.emplace_back(z);
      c.rational_match = prim;
    } else {
      c.rational_match = r;
    }
  }
  return ok;
}

SolutionSet solve_square_impl(const std::vector<MultiPoly>& system, const SolverConfig& cfg,
                              std::mt19937_64& rng) {
  const std::size_t n = system.size();
  if (n == 0) throw std::invalid_argument("empty system");
  std::vector<NumPoly> target;
  std::vector<int> degrees;
  long bezout = 1;
  for (const auto& p : system) {
    if (p.nvars() != n) throw std::invalid_argument("square system needs n equations in n unknowns");
    if (p.total_degree() < 1) throw std::invalid_argument("equations must have positive degree");
    target.push_back(to_num(p, true));
    degrees.push_back(p.total_degree());
    bezout *= p.total_degree();
  }

  SolutionSet out;
  out.bezout_bound = static_cast<int>(bezout);

  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<PathEnd> ends;
  int failed = 0;
  for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
    Homotopy H;
    H.n = n;
    H.target = target;
    H.degrees = degrees;
    H.gamma = unit_complex(rng);
    for (std::size_t i = 0; i < n; ++i) H.start_roots.push_back(unit_complex(rng));
    H.patch.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) H.patch[i] = cd(gauss(rng), gauss(rng));

    // start points: mixed-radix enumeration of the roots of unity
    std::vector<CVec> starts;
    std::vector<int> idx(n, 0);
    for (long s = 0; s < bezout; ++s) {
      CVec z(n + 1);
      z[0] = 1.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double arg = (std::arg(H.start_roots[i]) + 2.0 * std::numbers::pi * idx[i]) / degrees[i];
        z[i + 1] = std::polar(1.0, arg);
      }
      z /= H.patch.dot(z);
      starts.push_back(z);
      for (std::size_t i = 0; i < n; ++i) {
        if (++idx[i] < degrees[i]) break;
        idx[i] = 0;
      }
    }

    ends.assign(starts.size(), {});
    parallel_for(starts.size(), cfg.threads, [&](std::size_t i) { ends[i] = track(H, starts[i], cfg); });
    failed = static_cast<int>(std::count_if(ends.begin(), ends.end(), [](const PathEnd& e) { return e.status == PathStatus::Failed; }));
    if (failed == 0) break;
  }

  out.paths_failed = failed;
  out.paths_tracked = out.bezout_bound;
  bool residual_ok = true;
  std::vector<NumPoly> affine_num;
  for (const auto& p : system) affine_num.push_back(to_num(p, false));
  for (const auto& e : ends) {
    if (e.status == PathStatus::Infinite) ++out.at_infinity;
    if (e.status != PathStatus::Finite) continue;
    CPoint y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = e.z[i + 1] / e.z[0];
    const CVec yv = to_vec(y);
    const double scale = std::max(1.0, yv.norm());
    double res = 0.0;
    for (const auto& np : affine_num) {
      res = std::max(res, std::abs(eval_num(np, yv, nullptr)) / (np.norm * std::pow(scale, np.degree)));
    }
    bool merged = false;
    for (auto& c : out.clusters) {
      if (affine_distance(c.point, y) <= cfg.cluster_radius * std::max(1.0, cpoint_norm(c.point))) {
        ++c.multiplicity;
        if (res < c.residual) {
          c.residual = res;
          c.point = y;
        }
        merged = true;
        break;
      }
    }
    if (!merged) out.clusters.push_back({y, 1, res, std::nullopt});
  }
  for (const auto& c : out.clusters)
    if (!(c.residual < cfg.residual_tol)) residual_ok = false;
  if (!residual_ok) out.notes.push_back("finite endpoint above residual threshold");
  if (failed > 0) out.notes.push_back("path tracking failed after retries");
  sort_clusters(out.clusters);
  out.certified = failed == 0 && residual_ok;
  return out;
}

struct ChartAttempt {
  bool ok = false;
  std::vector<Cluster> kept;
  SolutionSet stats;
};

ChartAttempt chart_attempt(const std::vector<MultiPoly>& eqs, const SolverConfig& cfg, std::mt19937_64& rng) {
  const std::size_t N = eqs.front().nvars();
  const std::size_t n = N - 1;
  std::uniform_int_distribution<int> small(-9, 9);

  std::vector<MultiPoly> sub;
  if (eqs.size() == n) {
    sub = eqs;
  } else {
    RatMatrix c(n, eqs.size());
    do {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < eqs.size(); ++j) c(i, j) = small(rng);
    } while (rank(c) < n);
    for (std::size_t i = 0; i < n; ++i) {
      MultiPoly p(N);
      for (std::size_t j = 0; j < eqs.size(); ++j) p += c(i, j) * eqs[j];
      sub.push_back(p);
    }
  }

  RatMatrix B(N, N);
  do {
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) B(i, j) = small(rng);
  } while (sgn(determinant(B)) == 0);

  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < N; ++i) {
    MultiPoly img = MultiPoly::constant(n, B(i, 0));
    for (std::size_t j = 1; j < N; ++j) img += B(i, j) * MultiPoly::variable(n, j - 1);
    images.push_back(img);
  }
  std::vector<MultiPoly> affine;
  for (const auto& p : sub) affine.push_back(substitute(p, images));

  ChartAttempt out;
  out.stats = solve_square_impl(affine, cfg, rng);
  out.ok = out.stats.certified;

  std::vector<NumPoly> num;
  for (const auto& e : eqs) num.push_back(to_num(e, false));

  for (const auto& c : out.stats.clusters) {
    CPoint x(N);
    for (std::size_t i = 0; i < N; ++i) {
      cd v = to_double(B(i, 0));
      for (std::size_t j = 1; j < N; ++j) v += to_double(B(i, j)) * c.point[j - 1];
      x[i] = v;
    }
    x = normalize_projective(x);
    const CVec xv = to_vec(x);
    double res = 0.0;
    CMat jac(num.size(), N);
    CVec g(N);
    for (std::size_t k = 0; k < num.size(); ++k) {
      res = std::max(res, std::abs(eval_num(num[k], xv, &g)) / num[k].norm);
      jac.row(k) = g.transpose() / num[k].norm;
    }
    if (res >= kAmbiguousResidual) {
      out.stats.discarded += c.multiplicity;
      continue;
    }
    if (res >= cfg.residual_tol) {
      out.ok = false;
      out.stats.discarded += c.multiplicity;
      out.stats.notes.push_back("solution residual in the ambiguous band");
      continue;
    }
    if (c.multiplicity > 1) {
      out.ok = false;
      out.stats.notes.push_back("non-reduced solution (cluster multiplicity > 1)");
    }
    if (n > 0) {
      Eigen::JacobiSVD<CMat> svd(jac);
      const auto& sv = svd.singularValues();
      if (sv.size() < static_cast<Eigen::Index>(n) || sv[0] == 0.0 || sv[n - 1] / sv[0] < kRankTol) {
        out.ok = false;
        out.stats.notes.push_back("solution is not an isolated reduced point");
      }
    }
    out.kept.push_back({x, c.multiplicity, res, std::nullopt});
  }
  sort_clusters(out.kept);
  return out;
}

bool same_points(const std::vector<Cluster>& a, const std::vector<Cluster>& b, double radius) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& p : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!used[j] && projective_distance(p.point, b[j].point) <= radius) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

CPoint normalize_projective(const CPoint& p) {
  const double nrm = cpoint_norm(p);
  if (nrm == 0.0) return p;
  CPoint q = p;
  for (auto& c : q) c /= nrm;
  for (const auto& c : q) {
    if (std::abs(c) > 1e-6) {
      const cd rot = std::conj(c) / std::abs(c);
      for (auto& d : q) d *= rot;
      break;
    }
  }
  return q;
}

double projective_distance(const CPoint& a, const CPoint& b) {
  const double na = cpoint_norm(a), nb = cpoint_norm(b);
  if (na == 0.0 || nb == 0.0) return 1.0;
  cd ip = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) ip += std::conj(a[i]) * b[i];
  ip /= na * nb;
  // length of the part of b/|b| orthogonal to a
  double r2 = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) r2 += std::norm(b[i] / nb - ip * a[i] / na);
  return std::min(1.0, std::sqrt(r2));
}

SolutionSet solve_square(const std::vector<MultiPoly>& system, const SolverConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  SolutionSet out = solve_square_impl(system, cfg, rng);
  if (!rational_cross_check(out.clusters, system, false, cfg, out.notes)) out.certified = false;
  return out;
}

SolutionSet projective_solve(const std::vector<MultiPoly>& eqs, const SolverConfig& cfg) {
  if (eqs.empty()) throw std::invalid_argument("no equations");
  const std::size_t N = eqs.front().nvars();
  if (N < 2) throw std::invalid_argument("projective solve needs at least two variables");
  if (eqs.size() < N - 1) throw std::invalid_argument("fewer equations than the projective dimension");
  const int d0 = eqs.front().total_degree();
  for (const auto& e : eqs) {
    if (e.nvars() != N) throw std::invalid_argument("equations live in different rings");
    if (e.is_zero() || !e.is_homogeneous() || e.total_degree() < 1)
      throw std::invalid_argument("equations must be nonzero homogeneous of positive degree");
    if (eqs.size() > N - 1 && e.total_degree() != d0)
      throw std::invalid_argument("overdetermined systems must have equal degrees");
  }

  std::mt19937_64 rng(cfg.seed);
  std::vector<ChartAttempt> good;
  ChartAttempt last;
  bool agreed = false;
  int charts = 0;
  for (int a = 0; a < cfg.max_charts && !agreed; ++a) {
    last = chart_attempt(eqs, cfg, rng);
    ++charts;
    if (!last.ok) continue;
    for (const auto& g : good)
      if (same_points(g.kept, last.kept, 10.0 * cfg.cluster_radius)) agreed = true;
    good.push_back(last);
  }

  SolutionSet out = last.stats;
  out.projective = true;
  out.clusters = last.kept;
  out.charts_used = charts;
  out.certified = agreed;
  if (!agreed) out.notes.push_back("independent charts did not agree");
  if (!rational_cross_check(out.clusters, eqs, true, cfg, out.notes)) out.certified = false;
  return out;
}

SolutionSet base_points(const LinearSystem& sys, const SolverConfig& cfg) {
  sys.validate();
  std::vector<MultiPoly> eqs;
  for (const auto& q : sys.polynomials())
    if (!q.is_zero()) eqs.push_back(q);
  if (eqs.size() < sys.n) {
    SolutionSet out;
    out.projective = true;
    out.notes.push_back("base locus is positive-dimensional");
    return out;
  }
  return projective_solve(eqs, cfg);
}

SolutionSet singular_points(const MultiPoly& f, const SolverConfig& cfg) {
  if (f.is_zero()) throw std::invalid_argument("singular points of the zero polynomial");
  if (!f.is_homogeneous()) throw std::invalid_argument("singular points need a homogeneous polynomial");
  if (f.total_degree() < 1) throw std::invalid_argument("constant polynomial has no hypersurface");
  SolutionSet out;
  out.projective = true;
  if (f.total_degree() == 1) {
    out.certified = true;
    return out;
  }
  std::vector<MultiPoly> eqs;
  for (const auto& g : gradient(f))
    if (!g.is_zero()) eqs.push_back(g);
  if (eqs.size() < f.nvars() - 1) {
    out.notes.push_back("singular locus is positive-dimensional");
    return out;
  }
  return projective_solve(eqs, cfg);
}

}  // namespace weddle
