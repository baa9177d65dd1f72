#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bentcodes/cyclotomic.hpp"
#include "bentcodes/ntheory.hpp"

namespace bentcodes {

/// A bijection on Z_Q given by its image list.
class PermutationZQ {
 public:
  PermutationZQ(Modulus q, std::vector<std::int64_t> images);

  static PermutationZQ identity(Modulus q);
  /// x -> c*x + d; needs gcd(c, q) = 1.
  static PermutationZQ affine(Modulus q, std::int64_t c, std::int64_t d);
  /// Fisher-Yates shuffle driven by mt19937_64(seed). Platform independent.
  static PermutationZQ seeded(Modulus q, std::uint64_t seed);

  Modulus modulus() const noexcept { return q_; }
  const std::vector<std::int64_t>& images() const noexcept { return images_; }
  std::int64_t operator()(std::int64_t x) const { return images_[static_cast<std::size_t>(Residue::reduce(x, q_))]; }

  friend bool operator==(const PermutationZQ&, const PermutationZQ&) = default;

 private:
  Modulus q_;
  std::vector<std::int64_t> images_;
};

/// A generalised Boolean function Z_Q^m -> Z_Q as a value table, row-major
/// in its arguments (last coordinate fastest).
class FunctionZQ {
 public:
  /// Largest accepted table, q^m.
  static constexpr std::int64_t kMaxTableSize = 1'000'000;

  FunctionZQ(Modulus q, int arity, std::vector<std::int64_t> table);

  static FunctionZQ constant(Modulus q, int arity, std::int64_t value);

  Modulus modulus() const noexcept { return q_; }
  int arity() const noexcept { return m_; }
  const std::vector<std::int64_t>& table() const noexcept { return table_; }

  std::int64_t operator()(std::span<const std::int64_t> x) const;

  /// Number of points, q^m.
  std::size_t size() const noexcept { return table_.size(); }

  /// Coordinates of the point with flat index idx.
  std::vector<std::int64_t> point(std::size_t idx) const;

 private:
  Modulus q_;
  int m_;
  std::vector<std::int64_t> table_;
};

/// q^m, or throws when it exceeds FunctionZQ::kMaxTableSize.
std::int64_t checked_table_size(Modulus q, int arity);

struct FourierCoefficient {
  CyclotomicInt sum;           // S(a) = sum_x xi^(f(x) - a.x)
  std::complex<double> value;  // S(a) / sqrt(q^m)
};

FourierCoefficient fourier_coefficient(const FunctionZQ& f, std::span<const std::int64_t> a);

struct BentReport {
  bool bent = false;
  /// |S(a)|^2 per a in row-major order; empty when irrational.
  std::vector<std::optional<BigInt>> abs_sq;
  /// |F_f(a)| per a, float, for reporting.
  std::vector<double> magnitude;
};

/// Exact decision: bent iff |S(a)|^2 == q^m for every a.
BentReport is_generalized_bent(const FunctionZQ& f, unsigned threads = 1);

/// f(x1, x2) = x2 * omega(x1) + theta(x1).
FunctionZQ make_kumar_gbf(const PermutationZQ& omega, const FunctionZQ& theta);

}  // namespace bentcodes
