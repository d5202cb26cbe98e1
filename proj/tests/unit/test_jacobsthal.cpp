#include <doctest.h>

#include <stdexcept>

#include "weddle/jacobsthal.hpp"

using weddle::jacobsthal;

TEST_CASE("first Jacobsthal numbers") {
  const std::int64_t want[] = {0, 1, 1, 3, 5, 11, 21, 43, 85, 171, 341, 683, 1365, 2731};
  for (int n = 0; n < 14; ++n) CHECK(jacobsthal(n) == want[n]);
}

TEST_CASE("identities") {
  for (int n = 1; n < 62; ++n) {
    CHECK(jacobsthal(n + 1) == (std::int64_t{1} << n) - jacobsthal(n));
    CHECK(jacobsthal(n + 1) == 2 * jacobsthal(n) + (n % 2 ? -1 : 1));
    CHECK(jacobsthal(n + 1) == jacobsthal(n) + 2 * jacobsthal(n - 1));
  }
}

TEST_CASE("range") {
  CHECK_THROWS(jacobsthal(-1));
  CHECK_THROWS(jacobsthal(63));
}
