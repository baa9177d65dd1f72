#include "bentcodes/ntheory.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace bentcodes {

Modulus::Modulus(std::int64_t q) : q_(q) {
  if (q < 2) throw std::invalid_argument("modulus must be >= 2, got " + std::to_string(q));
}

std::int64_t gcd(std::int64_t a, std::int64_t b) noexcept { return std::gcd(a, b); }

std::int64_t smallest_prime_factor(std::int64_t q) {
  if (q < 2) throw std::invalid_argument("smallest_prime_factor: q must be >= 2");
  if (q % 2 == 0) return 2;
  for (std::int64_t d = 3; d <= q / d; d += 2) {
    if (q % d == 0) return d;
  }
  return q;
}

namespace {

// Extended Euclid: returns g = gcd(a, b) and x with a*x = g (mod b).
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t t = old_r / r;
    old_r -= t * r;
    std::swap(old_r, r);
    old_s -= t * s;
    std::swap(old_s, s);
  }
  x = old_s;
  return old_r;
}

}  // namespace

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  const Modulus mod(m);
  std::int64_t x = 0;
  if (ext_gcd(Residue::reduce(a, mod), m, x) != 1)
    throw std::invalid_argument("inverse_mod: argument not invertible");
  return Residue::reduce(x, mod);
}

std::vector<Residue> solve_linear_congruence(std::int64_t a, std::int64_t c, std::int64_t m) {
  if (m <= 1) throw std::invalid_argument("solve_linear_congruence: modulus must be > 1");
  const Modulus mod(m);
  const std::int64_t ar = Residue::reduce(a, mod);
  const std::int64_t cr = Residue::reduce(c, mod);
  const std::int64_t g = std::gcd(ar, m);  // gcd(0, m) = m
  std::vector<Residue> out;
  if (cr % g != 0) return out;

  // Reduce to (a/g) x = (c/g) mod (m/g), which has a unique solution x0;
  // the full set is x0 + k*(m/g) for k in [0, g).
  const std::int64_t step = m / g;
  std::int64_t x0 = 0;
  if (step > 1) {
    const Modulus reduced(step);
    const __int128 prod = static_cast<__int128>(inverse_mod(ar / g, step)) * ((cr / g) % step);
    x0 = Residue::reduce(static_cast<std::int64_t>(prod % step), reduced);
  }
  out.reserve(static_cast<std::size_t>(g));
  for (std::int64_t k = 0; k < g; ++k) out.emplace_back(x0 + k * step, mod);
  return out;
}

}  // namespace bentcodes
