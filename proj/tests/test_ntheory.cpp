#include <doctest.h>

#include <numeric>
#include <stdexcept>
#include <vector>

#include "bentcodes/ntheory.hpp"

using namespace bentcodes;

namespace {
std::vector<std::int64_t> values(const std::vector<Residue>& rs) {
  std::vector<std::int64_t> out;
  for (const auto& r : rs) out.push_back(r.value());
  return out;
}

std::vector<std::int64_t> brute_congruence(std::int64_t a, std::int64_t c, std::int64_t m) {
  std::vector<std::int64_t> out;
  for (std::int64_t x = 0; x < m; ++x) {
    if (((a * x - c) % m + m) % m == 0) out.push_back(x);
  }
  return out;
}
}  // namespace

TEST_CASE("smallest prime factor") {
  CHECK(smallest_prime_factor(35) == 5);
  CHECK(smallest_prime_factor(2) == 2);
  CHECK(smallest_prime_factor(221) == 13);
  CHECK(smallest_prime_factor(10961) == 97);
  CHECK(smallest_prime_factor(11009) == 101);
  CHECK(smallest_prime_factor(999983) == 999983);
  CHECK_THROWS_AS(smallest_prime_factor(1), std::invalid_argument);
  CHECK_THROWS_AS(smallest_prime_factor(-7), std::invalid_argument);
}

TEST_CASE("smallest prime factor divides q and is prime") {
  for (std::int64_t q = 2; q <= 1'000'000; ++q) {
    const auto p = smallest_prime_factor(q);
    if (q % p != 0) FAIL("spf does not divide ", q);
    if (q <= 20'000) {
      for (std::int64_t d = 2; d < p; ++d) {
        if (q % d == 0) FAIL("smaller factor ", d, " of ", q);
      }
    }
  }
}

TEST_CASE("linear congruence examples") {
  CHECK(values(solve_linear_congruence(1, 4, 7)) == std::vector<std::int64_t>{4});
  CHECK(values(solve_linear_congruence(2, 3, 4)).empty());
  // frozen from brute_congruence(4, 2, 6)
  CHECK(values(solve_linear_congruence(4, 2, 6)) == std::vector<std::int64_t>{2, 5});
  CHECK(brute_congruence(4, 2, 6) == std::vector<std::int64_t>{2, 5});
  CHECK(values(solve_linear_congruence(-3, -1, 7)) == brute_congruence(4, 6, 7));
  CHECK_THROWS_AS(solve_linear_congruence(1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(solve_linear_congruence(1, 1, 0), std::invalid_argument);
}

TEST_CASE("linear congruence matches exhaustive scan") {
  for (std::int64_t m = 2; m <= 200; ++m) {
    for (std::int64_t a = 0; a < m; ++a) {
      for (std::int64_t c = 0; c < m; ++c) {
        const auto sol = values(solve_linear_congruence(a, c, m));
        const std::int64_t g = std::gcd(a, m);
        const std::size_t expected = c % g == 0 ? static_cast<std::size_t>(g) : 0;
        if (sol.size() != expected) FAIL("count mismatch at ", a, "x=", c, " mod ", m);
        if (sol != brute_congruence(a, c, m)) FAIL("solution mismatch at ", a, "x=", c, " mod ", m);
      }
    }
  }
}

TEST_CASE("residue and modulus") {
  CHECK_THROWS_AS(Modulus(1), std::invalid_argument);
  CHECK(Residue(-1, Modulus(5)).value() == 4);
  CHECK(Residue(12, Modulus(5)).value() == 2);
  CHECK(inverse_mod(3, 7) == 5);
  CHECK_THROWS_AS(inverse_mod(2, 4), std::invalid_argument);
}
