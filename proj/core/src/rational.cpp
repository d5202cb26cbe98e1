#include "weddle/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace weddle {

Rat make_rat(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto valid_int = [](std::string_view t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den))
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  BigInt n(num), d(den);
  if (d == 0) throw std::domain_error("rational with zero denominator");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

bool is_zero(const Rat& r) { return sgn(r) == 0; }

bool is_integer(const Rat& r) { return r.get_den() == 1; }

double to_double(const Rat& r) { return r.get_d(); }

std::optional<Rat> reconstruct_rational(double x, long max_den, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  // Convergents h/k of the continued fraction of x.
  long double h_prev = 1, h = std::floor(static_cast<long double>(x));
  long double k_prev = 0, k = 1;
  long double frac = static_cast<long double>(x) - h;
  Rat best = make_rat(static_cast<long>(h), 1);
  for (int iter = 0; iter < 64; ++iter) {
    if (std::fabs(static_cast<double>(h / k) - x) <= tol) {
      best = make_rat(static_cast<long>(h), static_cast<long>(k));
      return best;
    }
    if (std::fabs(frac) < 1e-18L) break;
    long double inv = 1.0L / frac;
    long double a = std::floor(inv);
    frac = inv - a;
    long double h_next = a * h + h_prev;
    long double k_next = a * k + k_prev;
    if (k_next > static_cast<long double>(max_den)) break;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
  }
  if (std::fabs(static_cast<double>(h / k) - x) <= tol)
    return make_rat(static_cast<long>(h), static_cast<long>(k));
  return std::nullopt;
}

std::vector<BigInt> primitive_integer_vector(const std::vector<Rat>& v) {
  BigInt lcm_den = 1;
  for (const auto& r : v) lcm_den = lcm(lcm_den, BigInt(r.get_den()));
  std::vector<BigInt> out;
  out.reserve(v.size());
  BigInt g = 0;
  for (const auto& r : v) {
    BigInt z = r.get_num() * (lcm_den / r.get_den());
    g = gcd(g, z);
    out.push_back(z);
  }
  if (g == 0) return out;
  int sign = 0;
  for (const auto& z : out)
    if (z != 0) {
      sign = sgn(z);
      break;
    }
  for (auto& z : out) {
    z /= g;
    if (sign < 0) z = -z;
  }
  return out;
}

}  // namespace weddle
