#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weddle/rational.hpp"

namespace weddle {

/// Exponent vector of a monomial in x0..x{n-1}.
struct Monomial {
  std::vector<int> exps;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
  explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

  std::size_t nvars() const { return exps.size(); }
  int degree() const;
  Monomial operator*(const Monomial& other) const;

  bool operator==(const Monomial& other) const = default;
};

/// Graded lexicographic order, largest first: higher total degree wins, ties
/// broken by comparing exponents of x0, x1, ... in turn.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in graded-lex order (leading term first) and zero
/// coefficients are never stored, so structural equality is mathematical
/// equality.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rat, GrlexDescending>;

  explicit MultiPoly(std::size_t nvars = 1);

  static MultiPoly constant(std::size_t nvars, const Rat& c);
  static MultiPoly variable(std::size_t nvars, std::size_t index);
  static MultiPoly term(const Monomial& m, const Rat& c);
  /// c0*x0 + c1*x1 + ... ; the number of variables is coeffs.size().
  static MultiPoly linear_form(const std::vector<Rat>& coeffs);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// -1 for the zero polynomial.
  int total_degree() const;
  /// True for the zero polynomial as well.
  bool is_homogeneous() const;
  Rat coefficient(const Monomial& m) const;
  /// Coefficient of the graded-lex leading term (zero for the zero polynomial).
  Rat leading_coefficient() const;

  /// Coefficients of a homogeneous linear form; throws if not linear.
  std::vector<Rat> linear_coefficients() const;

  void add_term(const Monomial& m, const Rat& c);

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Rat& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rat& c) { return a *= c; }
  friend MultiPoly operator*(const Rat& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;

  bool operator==(const MultiPoly& other) const;

  MultiPoly pow(unsigned e) const;

 private:
  void check_same_ring(const MultiPoly& other) const;

  std::size_t nvars_;
  TermMap terms_;
};

MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_scale(const MultiPoly& p, const Rat& c);

/// Exact partial derivative with respect to x{var}.
MultiPoly differentiate(const MultiPoly& p, std::size_t var);
std::vector<MultiPoly> gradient(const MultiPoly& p);

Rat evaluate(const MultiPoly& p, const std::vector<Rat>& point);

/// Composition p(images[0], ..., images[n-1]); all images share one ring.
MultiPoly substitute(const MultiPoly& p, const std::vector<MultiPoly>& images);

/// Exact quotient f / l for a nonzero homogeneous linear l, or nullopt when
/// l does not divide f. Throws std::invalid_argument if l is zero or not a
/// linear form.
std::optional<MultiPoly> divides(const MultiPoly& l, const MultiPoly& f);

/// True iff f(s*p + t*q) is identically zero as a binary form in (s, t).
/// Throws if p and q are projectively equal (or either is zero).
bool vanishes_on_line(const MultiPoly& f, const std::vector<Rat>& p,
                      const std::vector<Rat>& q);

/// gcd of numerators over lcm of denominators; zero for the zero polynomial.
Rat content(const MultiPoly& p);

/// Primitive part with positive leading coefficient. Comparing two
/// polynomials "up to scalar" means comparing their normalized forms.
MultiPoly normalize_up_to_scalar(const MultiPoly& p);

/// Canonical text: graded-lex order, reduced fractions, e.g.
/// "x0^2*x1 - 121/48*x1 + 3". The zero polynomial prints as "0".
std::string to_string(const MultiPoly& p);

/// Parses sums/products/powers of x<i>, integers and fractions, with
/// parentheses. The ring has max(min_nvars, largest index + 1) variables.
MultiPoly parse_poly(std::string_view text, std::size_t min_nvars = 1);

}  // namespace weddle
