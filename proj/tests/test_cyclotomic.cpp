#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

#include "bentcodes/cyclotomic.hpp"

using namespace bentcodes;

namespace {

std::complex<double> float_oracle(std::int64_t q, const std::vector<int>& coeffs) {
  std::complex<double> s{0, 0};
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    s += static_cast<double>(coeffs[k]) * std::exp(std::complex<double>(0, 2 * std::numbers::pi * k / q));
  return s;
}

CyclotomicInt make(std::int64_t q, const std::vector<int>& c) {
  std::vector<BigInt> b(c.begin(), c.end());
  return CyclotomicInt(Modulus(q), std::move(b));
}

CyclotomicInt random_element(std::int64_t q, std::mt19937_64& rng, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<int> c(static_cast<std::size_t>(q));
  for (auto& x : c) x = d(rng);
  return make(q, c);
}

}  // namespace

TEST_CASE("root_power") {
  const auto x = root_power(Modulus(4), 6);
  CHECK(x.coeffs()[2] == 1);
  CHECK(x.coeffs()[0] == 0);
  CHECK(equal(root_power(Modulus(3), 0), CyclotomicInt::from_integer(Modulus(3), 1)));
  CHECK(equal(root_power(Modulus(5), 2) * root_power(Modulus(5), 4), root_power(Modulus(5), 1)));
}

TEST_CASE("ring operations") {
  const Modulus q4(4);
  const auto one = CyclotomicInt::from_integer(q4, 1);
  const auto xi = root_power(q4, 1);
  const auto x = make(4, {3, -1, 2, 7});
  CHECK(equal(x + CyclotomicInt(q4), x));
  // (1 + xi)(1 - xi) = 1 - xi^2 = 2
  const auto prod = (one + xi) * (one - xi);
  CHECK(rational_value(prod) == BigInt(2));

  std::vector<BigInt> all(6, 1);
  CHECK(is_zero(CyclotomicInt(Modulus(6), all)));
  CHECK_THROWS_AS(x + root_power(Modulus(5), 1), std::invalid_argument);
  CHECK_THROWS_AS(CyclotomicInt(Modulus(3), std::vector<BigInt>(4)), std::invalid_argument);
}

TEST_CASE("conjugation") {
  for (std::int64_t q = 2; q <= 12; ++q) {
    for (std::int64_t k = 0; k < q; ++k) CHECK(equal(conj(root_power(Modulus(q), k)), root_power(Modulus(q), q - k)));
    const auto n = CyclotomicInt::from_integer(Modulus(q), 17);
    CHECK(equal(conj(n), n));
  }
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const auto x = random_element(9, rng);
    CHECK(equal(conj(conj(x)), x));
  }
}

TEST_CASE("is_zero") {
  CHECK(is_zero(CyclotomicInt(Modulus(8))));
  CHECK(is_zero(make(7, {1, 1, 1, 1, 1, 1, 1})));
  CHECK_FALSE(is_zero(make(7, {1, 1, 1, 1, 1, 1, 0})));
  // 1 - xi + xi^2 - ... - xi^5 at q=6; evaluated by the float oracle first.
  const std::vector<int> alt{1, -1, 1, -1, 1, -1};
  const bool float_zero = std::abs(float_oracle(6, alt)) < 1e-12;
  CHECK(float_zero);
  CHECK(is_zero(make(6, alt)) == float_zero);
  // 1 + xi_4^2 = 0
  CHECK(is_zero(make(4, {1, 0, 1, 0})));
  CHECK_FALSE(is_zero(make(4, {1, 1, 0, 0})));
}

TEST_CASE("rational_value") {
  CHECK(rational_value(CyclotomicInt::from_integer(Modulus(5), 5)) == BigInt(5));
  CHECK_FALSE(rational_value(root_power(Modulus(4), 1)).has_value());
  // -1 expressed as xi_2... at q=6: xi^3 = -1
  CHECK(rational_value(root_power(Modulus(6), 3)) == BigInt(-1));
  // geometric sum times its conjugate, l = 2 at q = 6
  std::vector<std::int64_t> counts(6, 0);
  for (int j = 0; j < 6; ++j) counts[static_cast<std::size_t>((2 * j) % 6)] += 1;
  const auto s = CyclotomicInt::from_counts(Modulus(6), counts);
  CHECK(std::abs(s.evaluate()) < 1e-12);
  CHECK(rational_value(s * conj(s)) == BigInt(0));
  CHECK(abs_squared_counts(Modulus(6), counts) == BigInt(0));
}

TEST_CASE("cyclotomic polynomials") {
  // Phi_1 = x - 1, Phi_6 = x^2 - x + 1, Phi_12 = x^4 - x^2 + 1
  CHECK(*cyclotomic_polynomial(1) == std::vector<BigInt>{-1, 1});
  CHECK(*cyclotomic_polynomial(6) == std::vector<BigInt>{1, -1, 1});
  CHECK(*cyclotomic_polynomial(12) == std::vector<BigInt>{1, 0, -1, 0, 1});
  // Phi_105 is the first with a coefficient of magnitude 2.
  const auto phi105 = cyclotomic_polynomial(105);
  CHECK(phi105->size() == 49);
  bool has_two = false;
  for (const auto& c : *phi105) has_two = has_two || c == -2;
  CHECK(has_two);
}

TEST_CASE("concurrent cache lookups see complete polynomials") {
  std::vector<std::thread> pool;
  std::vector<std::size_t> degrees(8);
  for (std::size_t t = 0; t < degrees.size(); ++t) {
    pool.emplace_back([t, &degrees] { degrees[t] = cyclotomic_polynomial(1155)->size(); });
  }
  for (auto& th : pool) th.join();
  for (auto d : degrees) CHECK(d == 481);  // phi(1155) = 480
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::int64_t> qd(2, 30);
  for (int t = 0; t < 60; ++t) {
    const std::int64_t q = qd(rng);
    const auto x = random_element(q, rng), y = random_element(q, rng), z = random_element(q, rng);
    CHECK(equal((x * y) * z, x * (y * z)));
    CHECK(equal(x * (y + z), x * y + x * z));
    CHECK(equal(x * y, y * x));
    CHECK(equal(x + y, y + x));
    CHECK(is_zero(x - x));
  }
}

TEST_CASE("float embedding matches exact arithmetic") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> qd(2, 100);
  for (int t = 0; t < 40; ++t) {
    const std::int64_t q = qd(rng);
    std::uniform_int_distribution<int> cd(-1000, 1000);
    std::vector<int> c(static_cast<std::size_t>(q));
    for (auto& v : c) v = cd(rng);
    const auto x = make(q, c);
    CHECK(std::abs(x.evaluate() - float_oracle(q, c)) < 1e-9 * 1000 * q);
    const auto y = random_element(q, rng);
    const auto xy = x * y;
    CHECK(std::abs(xy.evaluate() - x.evaluate() * y.evaluate()) < 1e-6 * std::max(1.0, std::abs(xy.evaluate())));
    // zero test agrees with the float value
    const auto diff = xy - xy;
    CHECK(is_zero(diff));
  }
}

TEST_CASE("rational magnitude carrier") {
  const RationalMagnitudeSq r(6, 36);
  CHECK(r.numerator() == 1);
  CHECK(r.denominator() == 6);
  CHECK(r.to_string() == "1/6");
  CHECK(RationalMagnitudeSq(0, 5).to_string() == "0");
  CHECK(RationalMagnitudeSq(1, 4) < RationalMagnitudeSq(1, 3));
  CHECK_THROWS_AS(RationalMagnitudeSq(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(RationalMagnitudeSq(-1, 2), std::invalid_argument);
}
