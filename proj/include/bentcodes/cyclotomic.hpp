#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bentcodes/ntheory.hpp"

namespace bentcodes {

using BigInt = boost::multiprecision::cpp_int;

/// Nonnegative rational in lowest terms; the exact carrier for |<c1,c2>|^2.
class RationalMagnitudeSq {
 public:
  RationalMagnitudeSq() : num_(0), den_(1) {}
  RationalMagnitudeSq(BigInt numerator, BigInt denominator);

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  double to_double() const;
  std::string to_string() const;  // "n/d", or "n" when d == 1

  friend RationalMagnitudeSq operator*(const RationalMagnitudeSq& a, const RationalMagnitudeSq& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalMagnitudeSq operator+(const RationalMagnitudeSq& a, const RationalMagnitudeSq& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend bool operator==(const RationalMagnitudeSq& a, const RationalMagnitudeSq& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const RationalMagnitudeSq& a, const RationalMagnitudeSq& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const RationalMagnitudeSq& a, const RationalMagnitudeSq& b) { return b < a; }
  friend bool operator<=(const RationalMagnitudeSq& a, const RationalMagnitudeSq& b) { return !(b < a); }
  friend bool operator>=(const RationalMagnitudeSq& a, const RationalMagnitudeSq& b) { return !(a < b); }

 private:
  BigInt num_;
  BigInt den_;
};

/// q-th cyclotomic polynomial, low degree first. Computed once per modulus
/// and cached; safe to call concurrently.
std::shared_ptr<const std::vector<BigInt>> cyclotomic_polynomial(std::int64_t q);

/// Element sum_k coeffs[k] * xi^k of Z[xi], xi = exp(2 pi i / q).
///
/// The power basis 1, xi, ..., xi^(q-1) is linearly dependent, so two
/// different coefficient vectors may name the same element. Equality must
/// go through is_zero(x - y).
class CyclotomicInt {
 public:
  explicit CyclotomicInt(Modulus q);
  CyclotomicInt(Modulus q, std::vector<BigInt> coeffs);

  static CyclotomicInt from_integer(Modulus q, const BigInt& n);
  /// sum_d counts[d] xi^d; counts.size() must equal q.
  static CyclotomicInt from_counts(Modulus q, std::span<const std::int64_t> counts);

  Modulus modulus() const noexcept { return q_; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

  CyclotomicInt& operator+=(const CyclotomicInt& y);
  CyclotomicInt& operator-=(const CyclotomicInt& y);

  friend CyclotomicInt operator+(CyclotomicInt x, const CyclotomicInt& y) { return x += y; }
  friend CyclotomicInt operator-(CyclotomicInt x, const CyclotomicInt& y) { return x -= y; }
  friend CyclotomicInt operator-(CyclotomicInt x);
  friend CyclotomicInt operator*(const CyclotomicInt& x, const CyclotomicInt& y);

  /// Numerical value at xi = exp(2 pi i / q).
  std::complex<double> evaluate() const;

 private:
  Modulus q_;
  std::vector<BigInt> coeffs_;
};

CyclotomicInt root_power(Modulus q, std::int64_t k);
CyclotomicInt conj(const CyclotomicInt& x);

/// Canonical representative: remainder modulo Phi_q, length phi(q).
std::vector<BigInt> canonical_coeffs(const CyclotomicInt& x);

bool is_zero(const CyclotomicInt& x);
inline bool equal(const CyclotomicInt& x, const CyclotomicInt& y) { return is_zero(x - y); }

/// The rational integer x equals, if it is one.
std::optional<BigInt> rational_value(const CyclotomicInt& x);

/// |x|^2 = x * conj(x) as a rational integer. Returns nullopt when the norm
/// is irrational (not a rational integer).
std::optional<BigInt> abs_squared(const CyclotomicInt& x);

/// Same as abs_squared for sum_d counts[d] xi^d, skipping the BigInt
/// convolution when int64 cannot overflow.
std::optional<BigInt> abs_squared_counts(Modulus q, std::span<const std::int64_t> counts);

}  // namespace bentcodes
