#include "weddle/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weddle {

int Monomial::degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exps.size(); ++i) out.exps[i] += other.exps[i];
  return out;
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da > db;
  return std::lexicographical_compare(b.exps.begin(), b.exps.end(), a.exps.begin(),
                                      a.exps.end());
}

MultiPoly::MultiPoly(std::size_t nvars) : nvars_(nvars) {
  if (nvars == 0) throw std::invalid_argument("polynomial ring needs at least one variable");
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rat& c) {
  MultiPoly p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  Monomial m(nvars);
  m.exps[index] = 1;
  return term(m, Rat(1));
}

MultiPoly MultiPoly::term(const Monomial& m, const Rat& c) {
  MultiPoly p(m.nvars());
  p.add_term(m, c);
  return p;
}

MultiPoly MultiPoly::linear_form(const std::vector<Rat>& coeffs) {
  MultiPoly p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Monomial m(coeffs.size());
    m.exps[i] = 1;
    p.add_term(m, coeffs[i]);
  }
  return p;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_.begin()->first.degree();
}

bool MultiPoly::is_homogeneous() const {
  const int d = total_degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

Rat MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat MultiPoly::leading_coefficient() const {
  return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

std::vector<Rat> MultiPoly::linear_coefficients() const {
  if (!is_zero() && (total_degree() != 1 || !is_homogeneous()))
    throw std::invalid_argument("expected a homogeneous linear form");
  std::vector<Rat> out(nvars_, Rat(0));
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < nvars_; ++i)
      if (m.exps[i] == 1) out[i] = c;
  return out;
}

void MultiPoly::add_term(const Monomial& m, const Rat& c) {
  if (m.nvars() != nvars_) throw std::invalid_argument("monomial/ring size mismatch");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void MultiPoly::check_same_ring(const MultiPoly& other) const {
  if (other.nvars_ != nvars_)
    throw std::invalid_argument("polynomials live in rings with different numbers of variables");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_ring(b);
  MultiPoly out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = *this * other;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

bool MultiPoly::operator==(const MultiPoly& other) const {
  return nvars_ == other.nvars_ && terms_ == other.terms_;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(nvars_, Rat(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q) { return p + q; }
MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }
MultiPoly poly_scale(const MultiPoly& p, const Rat& c) { return p * c; }

MultiPoly differentiate(const MultiPoly& p, std::size_t var) {
  if (var >= p.nvars()) throw std::out_of_range("differentiation variable out of range");
  MultiPoly out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    const int e = m.exps[var];
    if (e == 0) continue;
    Monomial d = m;
    d.exps[var] = e - 1;
    out.add_term(d, c * e);
  }
  return out;
}

std::vector<MultiPoly> gradient(const MultiPoly& p) {
  std::vector<MultiPoly> out;
  out.reserve(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) out.push_back(differentiate(p, i));
  return out;
}

Rat evaluate(const MultiPoly& p, const std::vector<Rat>& point) {
  if (point.size() != p.nvars())
    throw std::invalid_argument("evaluation point has wrong length");
  Rat sum = 0;
  for (const auto& [m, c] : p.terms()) {
    Rat v = c;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      for (int k = 0; k < m.exps[i]; ++k) v *= point[i];
      if (sgn(v) == 0) break;
    }
    sum += v;
  }
  return sum;
}

MultiPoly substitute(const MultiPoly& p, const std::vector<MultiPoly>& images) {
  if (images.size() != p.nvars())
    throw std::invalid_argument("substitution needs one image per variable");
  const std::size_t target = images.empty() ? 1 : images.front().nvars();
  for (const auto& img : images)
    if (img.nvars() != target) throw std::invalid_argument("substitution images disagree on ring");
  // powers[i][k] = images[i]^k, built lazily
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto power = [&](std::size_t i, int k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MultiPoly::constant(target, Rat(1)));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  MultiPoly out(target);
  for (const auto& [m, c] : p.terms()) {
    MultiPoly t = MultiPoly::constant(target, c);
    for (std::size_t i = 0; i < m.nvars(); ++i)
      if (m.exps[i] > 0) t *= power(i, m.exps[i]);
    out += t;
  }
  return out;
}

std::optional<MultiPoly> divides(const MultiPoly& l, const MultiPoly& f) {
  if (l.is_zero()) throw std::invalid_argument("division by the zero form");
  if (l.total_degree() != 1 || !l.is_homogeneous())
    throw std::invalid_argument("divisor must be a homogeneous linear form");
  if (l.nvars() != f.nvars()) throw std::invalid_argument("ring mismatch in divides");
  const auto coeffs = l.linear_coefficients();
  // Lex order with x_v first makes c_v * x_v the leading term of l.
  std::size_t v = 0;
  while (sgn(coeffs[v]) == 0) ++v;
  auto lex_v_greater = [v](const Monomial& a, const Monomial& b) {
    if (a.exps[v] != b.exps[v]) return a.exps[v] > b.exps[v];
    for (std::size_t i = 0; i < a.nvars(); ++i) {
      if (i == v) continue;
      if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i];
    }
    return false;
  };
  MultiPoly rem = f;
  MultiPoly quot(f.nvars());
  while (!rem.is_zero()) {
    auto lead = rem.terms().begin();
    for (auto it = rem.terms().begin(); it != rem.terms().end(); ++it)
      if (lex_v_greater(it->first, lead->first)) lead = it;
    if (lead->first.exps[v] == 0) return std::nullopt;
    Monomial qm = lead->first;
    qm.exps[v] -= 1;
    const MultiPoly qt = MultiPoly::term(qm, lead->second / coeffs[v]);
    quot += qt;
    rem -= qt * l;
  }
  return quot;
}

bool vanishes_on_line(const MultiPoly& f, const std::vector<Rat>& p, const std::vector<Rat>& q) {
  const std::size_t n = f.nvars();
  if (p.size() != n || q.size() != n) throw std::invalid_argument("line points have wrong length");
  // p, q projectively equal iff all 2x2 minors vanish
  bool independent = false;
  for (std::size_t i = 0; i < n && !independent; ++i)
    for (std::size_t j = i + 1; j < n && !independent; ++j)
      if (sgn(p[i] * q[j] - p[j] * q[i]) != 0) independent = true;
  if (!independent) throw std::invalid_argument("line needs two projectively distinct points");
  std::vector<MultiPoly> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) images.push_back(MultiPoly::linear_form({p[i], q[i]}));
  return substitute(f, images).is_zero();
}

Rat content(const MultiPoly& p) {
  BigInt g = 0;
  BigInt l = 1;
  for (const auto& [m, c] : p.terms()) {
    g = gcd(g, BigInt(c.get_num()));
    l = lcm(l, BigInt(c.get_den()));
  }
  if (g == 0) return Rat(0);
  Rat out(g, l);
  out.canonicalize();
  return out;
}

MultiPoly normalize_up_to_scalar(const MultiPoly& p) {
  if (p.is_zero()) return p;
  Rat c = content(p);
  if (sgn(p.leading_coefficient()) < 0) c = -c;
  return p * (Rat(1) / c);
}

namespace {

std::string monomial_text(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i);
    if (m.exps[i] > 1) s += '^' + std::to_string(m.exps[i]);
  }
  return s;
}

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) +
                                ": " + what);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    for (;;) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        MultiPoly d = factor();
        if (d.total_degree() != 0) fail("division by a non-constant");
        acc *= Rat(1) / d.leading_coefficient();
      } else {
        return acc;
      }
    }
  }

  MultiPoly factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    MultiPoly base = primary();
    if (accept('^')) base = base.pow(static_cast<unsigned>(std::stoul(digits())));
    return base;
  }

  MultiPoly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (c == 'x') {
      ++pos_;
      const auto idx = std::stoul(digits());
      return MultiPoly::variable(nvars_, idx);
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return MultiPoly::constant(nvars_, Rat(BigInt(digits())));
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t nvars_;
};

}  // namespace

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    const Rat mag = negative ? Rat(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const std::string mono = monomial_text(m);
    if (mono.empty())
      os << to_string(mag);
    else if (mag == 1)
      os << mono;
    else
      os << to_string(mag) << '*' << mono;
  }
  return os.str();
}

MultiPoly parse_poly(std::string_view text, std::size_t min_nvars) {
  std::size_t nvars = std::max<std::size_t>(min_nvars, 1);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'x') continue;
    std::size_t j = i + 1;
    std::size_t idx = 0;
    bool any = false;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
      idx = idx * 10 + static_cast<std::size_t>(text[j] - '0');
      any = true;
      ++j;
    }
    if (any) nvars = std::max(nvars, idx + 1);
  }
  return PolyParser(text, nvars).parse();
}

}  // namespace weddle
