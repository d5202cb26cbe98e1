#pragma once

#include <random>
#include <vector>

#include "weddle/linalg.hpp"
#include "weddle/poly.hpp"
#include "weddle/system.hpp"
#include "weddle/weddle.hpp"

namespace weddle::test {

inline RatMatrix mat(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rat>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (long v : row) r.back().push_back(Rat(v));
  }
  return RatMatrix::from_rows(r);
}

inline RatMatrix matq(const std::vector<std::vector<const char*>>& rows) {
  std::vector<std::vector<Rat>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (const char* v : row) r.back().push_back(parse_rat(v));
  }
  return RatMatrix::from_rows(r);
}

inline RatPoint pt(const std::vector<long>& v) {
  RatPoint p;
  for (long x : v) p.push_back(Rat(x));
  return p;
}

inline MultiPoly P(const char* text, std::size_t nvars) { return parse_poly(text, nvars); }

inline LinearSystem system_of(std::size_t nvars, const std::vector<const char*>& polys) {
  LinearSystem s;
  s.n = nvars - 1;
  for (const char* p : polys) s.quadrics.push_back(quadric_matrix(parse_poly(p, nvars)));
  s.validate();
  return s;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
  Rat rational() {
    long den = integer(1, 5);
    return make_rat(integer(-9, 9), den);
  }
  RatMatrix symmetric(std::size_t d) {
    RatMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j) m(i, j) = m(j, i) = rational();
    return m;
  }
  LinearSystem system(std::size_t n) {
    LinearSystem s;
    s.n = n;
    for (std::size_t k = 0; k <= n; ++k) s.quadrics.push_back(symmetric(n + 1));
    return s;
  }
  RatPoint point(std::size_t d) {
    RatPoint p(d);
    bool nz = false;
    while (!nz) {
      for (auto& x : p) {
        x = Rat(integer(-5, 5));
        nz = nz || x != 0;
      }
    }
    return p;
  }
};

}  // namespace weddle::test
