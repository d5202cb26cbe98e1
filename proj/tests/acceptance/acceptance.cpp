// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "helpers.hpp"
#include "weddle/cubic.hpp"
#include "weddle/jacobsthal.hpp"
#include "weddle/tensor.hpp"

using namespace weddle;
using weddle::test::mat;
using weddle::test::P;
using weddle::test::pt;
using weddle::test::Rng;
using weddle::test::system_of;

namespace {

struct Check {
  bool ok = true;
  std::string why;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) why = what;
    ok = ok && cond;
  }
};

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Tensor3 e(std::size_t d, std::size_t i, std::size_t j, std::size_t k) { return Tensor3::basis_element(d, i, j, k); }

const char* kRank5Quartic =
    "x0*x1*x2*x3 - x0^2*x1*x2 - x0*x1^2*x2 - x0*x1*x2^2 - x0^2*x1*x3 - x0*x1^2*x3 - x0*x1*x3^2"
    " + x0^2*x2*x3 + x0*x2^2*x3 + x0*x2*x3^2 + x1^2*x2*x3 + x1*x2^2*x3 + x1*x2*x3^2";

RatMatrix rank5_M() { return mat({{1, 0, 1, 1}, {1, 2, 0, 1}, {0, 1, -1, 1}, {1, 0, 1, 0}}); }

Rat trace(const RatMatrix& m) {
  Rat t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

// 1: summand dimensions
void c1_dimensions(Check& c) {
  for (long n = 1; n <= 5; ++n) {
    const auto d = static_cast<std::size_t>(n + 1);
    const long want[4] = {binom(n + 3, 3), 2 * binom(n + 2, 3), 2 * binom(n + 2, 3), binom(n + 1, 3)};
    const SymmetryClass cls[4] = {SymmetryClass::Symmetric, SymmetryClass::Residual1, SymmetryClass::Residual2,
                                  SymmetryClass::SkewSymmetric};
    long total = 0;
    RatMatrix sum(d * d * d, d * d * d);
    for (int s = 0; s < 4; ++s) {
      const RatMatrix p = projector_matrix(cls[s], d);
      // idempotent, so rank = trace
      c.require(p * p == p, "projector not idempotent, n=" + std::to_string(n));
      c.require(trace(p) == Rat(want[s]), "rank mismatch for " + to_string(cls[s]) + ", n=" + std::to_string(n));
      c.require(basis(cls[s], d).size() == std::size_t(want[s]), "basis size, n=" + std::to_string(n));
      sum = sum + p;
      total += want[s];
    }
    c.require(sum == RatMatrix::identity(d * d * d), "projectors do not sum to the identity");
    c.require(total == (n + 1) * (n + 1) * (n + 1), "dimensions do not add up");
  }
}

// 2: printed residual bases in dimensions 2 and 3
void c2_bases(Check& c) {
  using Triple = std::array<std::size_t, 3>;
  struct Printed {
    Triple idx;
    Tensor3 tensor;
  };
  const Rat third(1, 3), two(2);
  const std::vector<Printed> dim2{
      {{1, 0, 0}, third * (e(2, 1, 0, 0) + e(2, 0, 1, 0) - two * e(2, 0, 0, 1))},
      {{1, 1, 0}, third * (two * e(2, 1, 1, 0) - e(2, 1, 0, 1) - e(2, 0, 1, 1))},
  };
  // the printed list is 3 N1(e_ijk)
  const std::vector<Printed> dim3{
      {{1, 0, 0}, e(3, 1, 0, 0) + e(3, 0, 1, 0) - two * e(3, 0, 0, 1)},
      {{2, 0, 0}, e(3, 2, 0, 0) + e(3, 0, 2, 0) - two * e(3, 0, 0, 2)},
      {{2, 1, 1}, e(3, 2, 1, 1) + e(3, 1, 2, 1) - two * e(3, 1, 1, 2)},
      {{1, 1, 0}, two * e(3, 1, 1, 0) - e(3, 1, 0, 1) - e(3, 0, 1, 1)},
      {{2, 2, 0}, two * e(3, 2, 2, 0) - e(3, 2, 0, 2) - e(3, 0, 2, 2)},
      {{2, 2, 1}, two * e(3, 2, 2, 1) - e(3, 2, 1, 2) - e(3, 1, 2, 2)},
      {{2, 1, 0}, e(3, 2, 1, 0) + e(3, 1, 2, 0) - e(3, 0, 1, 2) - e(3, 1, 0, 2)},
      {{2, 0, 1}, e(3, 2, 0, 1) + e(3, 0, 2, 1) - e(3, 0, 1, 2) - e(3, 1, 0, 2)},
  };
  auto compare = [&](std::size_t d, const std::vector<Printed>& printed, const Rat& scale) {
    const auto b = basis(SymmetryClass::Residual1, d);
    const auto idx = basis_index_triples(SymmetryClass::Residual1, d);
    c.require(b.size() == printed.size(), "basis size in dim " + std::to_string(d));
    for (const auto& p : printed) {
      bool found = false;
      for (std::size_t m = 0; m < idx.size(); ++m) {
        if (idx[m] != p.idx) continue;
        found = true;
        c.require(scale * b[m] == p.tensor, "entry mismatch in dim " + std::to_string(d));
        c.require(n1_part(e(d, p.idx[0], p.idx[1], p.idx[2])) == b[m], "basis is not N1 of its index");
      }
      c.require(found, "printed element missing from basis in dim " + std::to_string(d));
    }
  };
  compare(2, dim2, Rat(1));
  compare(3, dim3, Rat(3));
}

// 3: Weddle fixtures
void c3_weddle(Check& c) {
  c.require(weddle_matrix(system_of(3, {"x0^2", "x1^2", "x2^2"})).polynomial == P("x0*x1*x2", 3), "coordinate conics");
  c.require(weddle_matrix(system_of(4, {"x0^2", "x1^2", "x2^2", "x3^2"})).polynomial == P("x0*x1*x2*x3", 4),
            "coordinate quadrics");
  const WeddleData d = weddle_matrix(system_of(3, {"x0^2 + 2*x0*x1 + 4*x0*x2 + x1^2 + 4*x1*x2 + 3*x2^2",
                                                   "4*x0^2 + 8*x0*x1 + 10*x0*x2 + 4*x1^2 + 10*x1*x2 + 7*x2^2",
                                                   "2*x0^2 + 4*x0*x1 - 2*x0*x2 + 2*x1^2 - 2*x1*x2"}));
  c.require(d.degenerate && d.determinant.is_zero(), "degenerate triple has nonzero determinant");
}

// 4: gradient = 2 contraction
void c4_gradient(Check& c) {
  Rng rng(404);
  for (int t = 0; t < 200; ++t) {
    const LinearSystem s = rng.system(1 + t % 4);
    c.require(gradient_matrix(s) == contraction_matrix(s).scaled(Rat(2)), "mismatch in trial " + std::to_string(t));
  }
}

// 5: base points are singular points of the Weddle locus
void c5_base_points(Check& c) {
  Rng rng(505);
  int done = 0;
  while (done < 100) {
    const std::size_t n = 2 + done % 3;
    const std::size_t npts = std::size_t(binom(long(n) + 1, 2));
    std::vector<RatPoint> pts;
    for (std::size_t i = 0; i < npts; ++i) {
      RatPoint p(n + 1);
      for (auto& x : p) x = rng.rational();
      if (std::all_of(p.begin(), p.end(), [](const Rat& v) { return v == 0; })) p[0] = 1;
      pts.push_back(p);
    }
    auto qs = quadrics_through_points(pts, n);
    if (qs.size() != n + 1) continue;  // special position, resample
    LinearSystem s;
    s.n = n;
    s.quadrics = qs;
    const MultiPoly w = weddle_matrix(s).polynomial;
    for (const auto& p : pts) {
      c.require(is_base_point(s, p), "sample point is not a base point");
      c.require(singular_at(w, p), "base point not singular, trial " + std::to_string(done));
    }
    ++done;
  }
}

// 6: j-invariants of the witnesses
void c6_witnesses(Check& c) {
  const MultiPoly c1 = P("x0*x1*x2 - x0^2*x1 - x0*x1^2 - x0^2*x2 - x0*x2^2 + x1^2*x2 + x1*x2^2", 3);
  const MultiPoly c2 = P("x0*x1*x2 - x0^2*x1 - 2*x0*x1^2 - x0^2*x2 - 2*x0*x2^2 + x0^3 + 2*x1^2*x2 + 2*x1*x2^2", 3);
  const LinearSystem t1 = system_of(3, {"x0^2 + 2*x0*x1 + 2*x0*x2 + 2*x1*x2", "x0^2 + x1^2", "x0^2 + x2^2"});
  const LinearSystem t2 = system_of(3, {"x0^2 + 2*x0*x1 + 2*x0*x2 + x1^2 + x2^2", "2*x0*x1 - x1^2", "2*x0*x2 - x2^2"});
  c.require(weddle_matrix(t1).polynomial == normalize_up_to_scalar(c1), "first witness locus");
  c.require(weddle_matrix(t2).polynomial == normalize_up_to_scalar(c2), "second witness locus");
  const WeierstrassResult r1 = weierstrass_reduce(c1), r2 = weierstrass_reduce(c2);
  c.require(r1.exact && *r1.form == ShortWeierstrass{Rat(-121, 48), Rat(845, 864)}, "first Weierstrass pair");
  c.require(r2.exact && *r2.form == ShortWeierstrass{Rat(-1633, 48), Rat(61201, 864)}, "second Weierstrass pair");
  const JInvariant j1 = j_invariant(c1), j2 = j_invariant(c2);
  c.require(j1.exact && j1.value == Rat(1771561, 612), "first j");
  c.require(j2.exact && j2.value == Rat(4354703137, 352512), "second j");
}

// 7: rank-5 construction
void c7_rank5(Check& c) {
  const MultiPoly f = rank5_determinant(rank5_M());
  c.require(f == P(kRank5Quartic, 4), "determinant differs from the printed quartic");
  Rng rng(707);
  for (int t = 0; t < 50; ++t) {
    RatMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = rng.rational();
    c.require(rank5_identity_check(m), "closed form fails, trial " + std::to_string(t));
  }
  const auto special = rank5_special_points();
  c.require(special.size() == 10, "ten special points");
  for (const auto& p : special) c.require(singular_at(f, p), "special point not singular");
  const SolutionSet s = singular_points(f);
  c.require(s.certified, "count not certified");
  c.require(s.count() == 10, "count is " + std::to_string(s.count()));
  c.require(s.paths_tracked == 27, "paths tracked " + std::to_string(s.paths_tracked));
  c.require(s.charts_used >= 2, "single chart");
  for (const auto& p : special) {
    bool hit = false;
    for (const auto& cl : s.clusters)
      if (cl.rational_match && primitive_integer_vector(*cl.rational_match) == primitive_integer_vector(p)) hit = true;
    if (!hit) {
      RatPoint q = p;
      for (auto& x : q) x = -x;
      for (const auto& cl : s.clusters)
        if (cl.rational_match && primitive_integer_vector(*cl.rational_match) == primitive_integer_vector(q)) hit = true;
    }
    c.require(hit, "special point not among numeric solutions");
  }
}

// 8: cyclic relation
void c8_cyclic(Check& c) {
  for (std::size_t d = 2; d <= 6; ++d)
    for (std::uint64_t t = 0; t < 50; ++t) {
      const Tensor3 tensor = random_n1(d, 8000 + 100 * d + t);
      c.require(in_N1V(tensor), "sample outside N1");
      c.require(cyclic_relation_check(LinearSystem::from_tensor(tensor)).is_zero(),
                "relation fails in dim " + std::to_string(d));
    }
}

// 9: base-point counts of cyclic-symmetric systems
void c9_jacobsthal_counts(Check& c) {
  const int trials = 10;
  for (int d = 2; d <= 5; ++d) {
    int certified = 0;
    for (int t = 0; t < trials; ++t) {
      SolverConfig cfg;
      cfg.seed = 9000 + 100 * d + t;
      const SolutionSet s = base_points(LinearSystem::from_tensor(random_n1(d, cfg.seed)), cfg);
      if (!s.certified) {
        std::printf("      dim %d trial %d uncertified (excluded)\n", d, t);
        continue;
      }
      ++certified;
      c.require(std::int64_t(s.count()) == jacobsthal(d),
                "dim " + std::to_string(d) + " trial " + std::to_string(t) + " count " + std::to_string(s.count()));
    }
    std::printf("      dim %d: %d/%d certified, expected %lld\n", d, certified, trials,
                static_cast<long long>(jacobsthal(d)));
    c.require(certified * 5 >= trials * 4, "too few certified trials in dim " + std::to_string(d));
  }
}

// 10: rank certificates
void c10_certificates(Check& c) {
  LinearSystem six;
  six.n = 3;
  six.quadrics = quadrics_through_points(
      {pt({1, 0, 0, 0}), pt({0, 1, 0, 0}), pt({0, 0, 1, 0}), pt({0, 0, 0, 1}), pt({1, 1, 1, 1}), pt({2, -1, 5, -7})}, 3);
  const RankCertificate a = rank_lower_bound_certificate(six);
  c.require(a.count_certified && a.singular_count == 6, "six-point system count " + std::to_string(a.singular_count));
  c.require(a.conclusion == RankConclusion::RankAtLeast6, "six-point system conclusion");

  LinearSystem rnd;
  rnd.n = 3;
  rnd.quadrics = {weddle::test::matq({{"0", "-3/2", "0", "2"}, {"-3/2", "1", "-1", "1/2"}, {"0", "-1", "-5", "1"}, {"2", "1/2", "1", "1"}}),
                  weddle::test::matq({{"1", "-1/2", "-1/2", "1/2"}, {"-1/2", "0", "-1/2", "6"}, {"-1/2", "-1/2", "1", "4"}, {"1/2", "6", "4", "25"}}),
                  weddle::test::matq({{"-7", "1", "-13/2", "0"}, {"1", "-1", "-3/2", "1/2"}, {"-13/2", "-3/2", "101", "3/2"}, {"0", "1/2", "3/2", "4"}}),
                  weddle::test::matq({{"-4", "-9/2", "13/2", "2"}, {"-9/2", "0", "0", "-15/2"}, {"13/2", "0", "-1", "-1/2"}, {"2", "-15/2", "-1/2", "1"}})};
  const RankCertificate b = rank_lower_bound_certificate(rnd);
  c.require(b.count_certified && b.singular_count == 0, "random system count " + std::to_string(b.singular_count));
  c.require(b.conclusion == RankConclusion::RankAtLeast6, "random system conclusion");

  const RankCertificate r5 = rank_lower_bound_certificate(rank5_system(rank5_M()));
  c.require(r5.count_certified && r5.singular_count == 10, "rank-5 count " + std::to_string(r5.singular_count));
  c.require(r5.conclusion == RankConclusion::Inconclusive, "rank-5 conclusion");
}

// 11: splitting of low-rank Weddle loci
void c11_splitting(Check& c) {
  auto product_matches = [](const std::vector<MultiPoly>& factors, const MultiPoly& f) {
    MultiPoly prod = MultiPoly::constant(f.nvars(), Rat(1));
    for (const auto& l : factors) prod = prod * l;
    return normalize_up_to_scalar(prod) == normalize_up_to_scalar(f);
  };

  // canonical cubic: singular points found numerically, then checked exactly
  const MultiPoly cubic = weddle_matrix(system_of(3, {"x0^2", "x1^2", "x2^2"})).polynomial;
  const SolutionSet s = singular_points(cubic);
  std::vector<RatPoint> pts;
  for (const auto& cl : s.clusters)
    if (cl.rational_match && singular_at(cubic, *cl.rational_match)) pts.push_back(*cl.rational_match);
  c.require(s.certified && pts.size() == 3, "cubic singular points");
  const auto split3 = splits_into_hyperplanes(cubic, pts);
  c.require(split3 && split3->size() == 3 && product_matches(*split3, cubic), "cubic does not split");

  // canonical quartic: the triple points are its vertices
  const MultiPoly quartic = weddle_matrix(system_of(4, {"x0^2", "x1^2", "x2^2", "x3^2"})).polynomial;
  const std::vector<RatPoint> verts{pt({1, 0, 0, 0}), pt({0, 1, 0, 0}), pt({0, 0, 1, 0}), pt({0, 0, 0, 1})};
  for (const auto& v : verts) c.require(singular_at(quartic, v), "vertex not singular");
  const auto split4 = splits_into_hyperplanes(quartic, verts);
  c.require(split4 && split4->size() == 4 && product_matches(*split4, quartic), "quartic does not split");

  // the same in random coordinates
  Rng rng(1111);
  for (std::size_t m : {3u, 4u}) {
    RatMatrix a(m, m);
    do {
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) a(i, j) = Rat(rng.integer(-4, 4));
    } while (determinant(a) == 0);
    std::vector<MultiPoly> forms;
    for (std::size_t i = 0; i < m; ++i) forms.push_back(MultiPoly::linear_form(a.row(i)));
    RatMatrix coeffs(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) coeffs(i, j) = Rat(rng.integer(-5, 5));
    if (determinant(coeffs) == 0) coeffs = RatMatrix::identity(m);
    const MultiPoly w = weddle_matrix(rank_r_system(forms, coeffs)).polynomial;
    const RatMatrix inv = inverse(a);
    std::vector<RatPoint> corners;
    for (std::size_t j = 0; j < m; ++j) {
      RatPoint p(m);
      for (std::size_t i = 0; i < m; ++i) p[i] = inv(i, j);
      c.require(singular_at(w, p), "vertex not singular in random coordinates");
      corners.push_back(p);
    }
    const auto split = splits_into_hyperplanes(w, corners);
    c.require(split && split->size() == m && product_matches(*split, w), "no split in random coordinates");
  }
}

// 12: Jacobsthal identities
void c12_identities(Check& c) {
  std::int64_t a = 0, b = 1;  // J_0, J_1 by the recurrence
  for (int n = 0; n <= 30; ++n) {
    c.require(jacobsthal(n) == a, "recurrence at " + std::to_string(n));
    const std::int64_t pow2 = std::int64_t{1} << n;
    c.require(3 * jacobsthal(n) == pow2 - (n % 2 ? -1 : 1), "closed form at " + std::to_string(n));
    c.require(jacobsthal(n + 1) == pow2 - jacobsthal(n), "2^n - J_n at " + std::to_string(n));
    c.require(jacobsthal(n + 1) == 2 * jacobsthal(n) + (n % 2 ? -1 : 1), "2J_n + (-1)^n at " + std::to_string(n));
    const std::int64_t next = b + 2 * a;
    a = b;
    b = next;
  }
  c.require(jacobsthal(13) == 2731, "J_13");
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "decomposition dimensions", 1, c1_dimensions},
      {2, "residual basis fixtures", 1, c2_bases},
      {3, "Weddle fixtures", 1, c3_weddle},
      {4, "gradient equals twice contraction", 5, c4_gradient},
      {5, "base points are singular", 30, c5_base_points},
      {6, "j-invariant witnesses", 5, c6_witnesses},
      {7, "rank-5 construction", 60, c7_rank5},
      {8, "cyclic relation", 10, c8_cyclic},
      {9, "Jacobsthal base-point counts", 300, c9_jacobsthal_counts},
      {10, "rank certificates", 120, c10_certificates},
      {11, "splitting into hyperplanes", 1, c11_splitting},
      {12, "Jacobsthal identities", 1, c12_identities},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& ex) {
      c.require(false, std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > cr.limit_s) c.require(false, "over time limit of " + std::to_string(cr.limit_s) + " s");
    std::printf("%s [%2d] %-36s %8.3f s%s%s\n", c.ok ? "PASS" : "FAIL", cr.id, cr.name, secs, c.ok ? "" : "  ",
                c.why.c_str());
    std::fflush(stdout);
    if (!c.ok) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
