#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "weddle/cubic.hpp"

using namespace weddle;
using weddle::test::P;
using weddle::test::pt;
using weddle::test::Rng;

namespace {

const char* kC1 = "x0*x1*x2 - x0^2*x1 - x0*x1^2 - x0^2*x2 - x0*x2^2 + x1^2*x2 + x1*x2^2";
const char* kC2 = "x0*x1*x2 - x0^2*x1 - 2*x0*x1^2 - x0^2*x2 - 2*x0*x2^2 + x0^3 + 2*x1^2*x2 + 2*x1*x2^2";

MultiPoly random_substitution(const MultiPoly& f, Rng& rng) {
  RatMatrix a(3, 3);
  do {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) a(i, j) = Rat(rng.integer(-3, 3));
  } while (determinant(a) == 0);
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < 3; ++i) images.push_back(MultiPoly::linear_form(a.row(i)));
  return substitute(f, images);
}

}  // namespace

TEST_CASE("j of short forms") {
  CHECK(j_short({Rat(1), Rat(0)}) == 1728);
  CHECK(j_short({Rat(0), Rat(1)}) == 0);
  CHECK(j_short({Rat(-121, 48), Rat(845, 864)}) == Rat(1771561, 612));
  CHECK(j_short({Rat(-1633, 48), Rat(61201, 864)}) == Rat(4354703137, 352512));
  CHECK_THROWS_AS(j_short({Rat(-3), Rat(2)}), std::domain_error);
}

TEST_CASE("canonical short form is a scaling invariant") {
  const ShortWeierstrass w{Rat(-121, 48), Rat(845, 864)};
  for (long u : {2L, 3L, 5L}) {
    const Rat v(u, 7), v2 = v * v;
    const ShortWeierstrass s{w.a * v2 * v2, w.b * v2 * v2 * v2};
    CHECK(canonical_short_form(s) == canonical_short_form(w));
  }
  CHECK(canonical_short_form(w) == w);
  CHECK(canonical_short_form(ShortWeierstrass{Rat(-1633, 48), Rat(61201, 864)}) ==
        ShortWeierstrass{Rat(-1633, 48), Rat(61201, 864)});
}

TEST_CASE("smoothness of plane cubics") {
  CHECK(is_smooth_cubic(P(kC1, 3)) == Smoothness::Smooth);
  CHECK(is_smooth_cubic(P(kC2, 3)) == Smoothness::Smooth);
  CHECK(is_smooth_cubic(P("x0*x1*x2", 3)) == Smoothness::Singular);
  CHECK(is_smooth_cubic(P("x1^2*x2 - x0^3", 3)) == Smoothness::Singular);
  CHECK_THROWS(is_smooth_cubic(P("x0^2*x1", 2)));
}

TEST_CASE("Hessian of the Fermat cubic") {
  const PolyMatrix h = hessian(P("x0^3 + x1^3 + x2^3", 3));
  CHECK(h(0, 0) == P("6*x0", 3));
  CHECK(h(0, 1).is_zero());
  CHECK(det(h) == P("216*x0*x1*x2", 3));
}

TEST_CASE("rational flexes") {
  const auto flexes = rational_flexes(P(kC1, 3));
  REQUIRE_FALSE(flexes.empty());
  const MultiPoly h = det(hessian(P(kC1, 3)));
  for (const auto& p : flexes) {
    CHECK(evaluate(P(kC1, 3), p) == 0);
    CHECK(evaluate(h, p) == 0);
  }
}

TEST_CASE("flex invariants of a short curve") {
  // x0 x2^2 = x1^3 + a x0^2 x1 + b x0^3 with flex [0:0:1]
  const auto [c4, c6] = flex_invariants(P("x0*x2^2 - x1^3 - 2*x0^2*x1 - 3*x0^3", 3), pt({0, 0, 1}));
  CHECK(canonical_short_form(c4, c6) == canonical_short_form(ShortWeierstrass{Rat(2), Rat(3)}));
  CHECK_THROWS(flex_invariants(P("x0*x2^2 - x1^3 - 2*x0^2*x1 - 3*x0^3", 3), pt({1, 0, 0})));
}

TEST_CASE("witness reductions") {
  const WeierstrassResult r1 = weierstrass_reduce(P(kC1, 3));
  REQUIRE(r1.exact);
  CHECK(*r1.form == ShortWeierstrass{Rat(-121, 48), Rat(845, 864)});
  const WeierstrassResult r2 = weierstrass_reduce(P(kC2, 3));
  REQUIRE(r2.exact);
  CHECK(*r2.form == ShortWeierstrass{Rat(-1633, 48), Rat(61201, 864)});
  CHECK(j_invariant(P(kC1, 3)).value == Rat(1771561, 612));
  CHECK(j_invariant(P(kC2, 3)).value == Rat(4354703137, 352512));
  CHECK(j_invariant(P(kC1, 3)).value != j_invariant(P(kC2, 3)).value);
}

TEST_CASE("numeric j agrees with the exact value") {
  for (const char* f : {kC1, kC2}) {
    const JInvariant ex = j_invariant(P(f, 3));
    const JInvariant nu = j_invariant(P(f, 3), {}, true);
    CHECK_FALSE(nu.exact);
    CHECK(nu.certified);
    const double want = to_double(ex.value);
    CHECK(std::abs(nu.numeric - std::complex<double>(want, 0)) < 1e-6 * std::abs(want));
  }
}

TEST_CASE("j is invariant under linear substitutions") {
  Rng rng(13);
  for (const char* f : {kC1, kC2}) {
    const double want = to_double(j_invariant(P(f, 3)).value);
    for (int t = 0; t < 3; ++t) {
      const MultiPoly g = random_substitution(P(f, 3), rng);
      const JInvariant j = j_invariant(g, {}, true);
      CHECK(std::abs(j.numeric - std::complex<double>(want, 0)) < 1e-6 * std::abs(want));
    }
  }
}

TEST_CASE("special j values") {
  CHECK(j_invariant(P("x0^3 + x1^3 + x2^3", 3)).value == 0);
  CHECK(j_invariant(P("x0*x2^2 - x1^3 - x0^2*x1", 3)).value == 1728);
  CHECK_THROWS(j_invariant(P("x0*x1*x2", 3)));
}
