#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace weddle {

// Exact rationals. mpq_class keeps values canonical (lowest terms, positive
// denominator) as long as every construction goes through make_rat/parse_rat.
using Rat = mpq_class;
using BigInt = mpz_class;

Rat make_rat(long num, long den = 1);

// Accepts "3", "-7", "5/12", "-121/48". Throws std::invalid_argument.
Rat parse_rat(std::string_view text);

std::string to_string(const Rat& r);

bool is_zero(const Rat& r);
bool is_integer(const Rat& r);

double to_double(const Rat& r);

// Continued-fraction approximation with denominator <= max_den.
// Returns nullopt when |x - p/q| > tol for the best convergent.
std::optional<Rat> reconstruct_rational(double x, long max_den, double tol);

// Primitive integer representative of a rational vector (content removed,
// first nonzero entry positive). Zero vectors are returned unchanged.
std::vector<BigInt> primitive_integer_vector(const std::vector<Rat>& v);

}  // namespace weddle
