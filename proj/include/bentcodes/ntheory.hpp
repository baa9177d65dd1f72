#pragma once

#include <cstdint>
#include <vector>

namespace bentcodes {

/// The ring size Q of Z_Q. Always at least 2.
class Modulus {
 public:
  explicit Modulus(std::int64_t q);

  std::int64_t value() const noexcept { return q_; }
  operator std::int64_t() const noexcept { return q_; }

  friend bool operator==(Modulus, Modulus) = default;

 private:
  std::int64_t q_;
};

/// Element of Z_Q in the canonical range [0, q).
class Residue {
 public:
  Residue(std::int64_t value, Modulus m) : value_(reduce(value, m)), modulus_(m) {}

  std::int64_t value() const noexcept { return value_; }
  Modulus modulus() const noexcept { return modulus_; }

  static std::int64_t reduce(std::int64_t x, Modulus m) noexcept {
    const std::int64_t r = x % m.value();
    return r < 0 ? r + m.value() : r;
  }

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  std::int64_t value_;
  Modulus modulus_;
};

std::int64_t gcd(std::int64_t a, std::int64_t b) noexcept;

/// Least prime dividing q, by trial division up to sqrt(q). Throws for q < 2.
std::int64_t smallest_prime_factor(std::int64_t q);

/// All x in [0, m) with a*x = c (mod m), ascending. There are gcd(a, m)
/// of them when gcd(a, m) divides c and none otherwise. Throws for m <= 1.
std::vector<Residue> solve_linear_congruence(std::int64_t a, std::int64_t c, std::int64_t m);

/// Modular inverse of a mod m; requires gcd(a, m) = 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

}  // namespace bentcodes
