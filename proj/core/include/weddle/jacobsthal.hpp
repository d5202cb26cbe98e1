#pragma once

#include <cstdint>

namespace weddle {

/// J_0 = 0, J_1 = 1, J_n = J_{n-1} + 2 J_{n-2}. Valid for 0 <= n <= 62;
/// throws std::logic_error if the recurrence, the complement identity, the
/// doubling identity and the closed form disagree.
std::int64_t jacobsthal(int n);

}  // namespace weddle
