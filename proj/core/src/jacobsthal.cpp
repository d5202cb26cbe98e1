#include "weddle/jacobsthal.hpp"

#include <stdexcept>

namespace weddle {

std::int64_t jacobsthal(int n) {
  if (n < 0 || n > 62) throw std::out_of_range("jacobsthal index out of range");
  std::int64_t prev = 0, cur = 1;  // J_0, J_1
  if (n == 0) return 0;
  for (int k = 1; k < n; ++k) {
    const std::int64_t next = cur + 2 * prev;
    const std::int64_t pow2 = std::int64_t{1} << k;
    const std::int64_t sign = (k % 2 == 0) ? 1 : -1;
    // J_{k+1} from J_k two other ways
    if (next != pow2 - cur || next != 2 * cur + sign)
      throw std::logic_error("jacobsthal identities disagree");
    prev = cur;
    cur = next;
  }
  const std::int64_t pow2n = std::int64_t{1} << n;
  const std::int64_t signn = (n % 2 == 0) ? 1 : -1;
  if ((pow2n - signn) % 3 != 0 || (pow2n - signn) / 3 != cur)
    throw std::logic_error("jacobsthal closed form disagrees");
  return cur;
}

}  // namespace weddle
