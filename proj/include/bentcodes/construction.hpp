#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "bentcodes/cyclotomic.hpp"
#include "bentcodes/gbf.hpp"
#include "bentcodes/ntheory.hpp"

namespace bentcodes {

enum class ConstructionKind { One = 1, Two = 2 };

/// Exponent storage: one row per phase codeword, entries in [0, q).
using ExponentMatrix = Eigen::Matrix<std::int32_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

enum class CodewordKind { StandardBasis, Phase };

/// A single codeword by value. Phase words carry K exponents and a common
/// squared scale of 1/K; basis words carry only their index.
struct Codeword {
  CodewordKind kind = CodewordKind::StandardBasis;
  Modulus q{2};
  std::int64_t length = 0;
  std::int64_t basis_index = 0;
  std::vector<std::int64_t> exponents;
  RationalMagnitudeSq scale_sq{1, 1};

  static Codeword standard_basis(Modulus q, std::int64_t length, std::int64_t index);
  static Codeword phase(Modulus q, std::vector<std::int64_t> exponents);
};

struct CodewordEntry {
  CyclotomicInt numerator;      // 0, 1 or xi^e
  RationalMagnitudeSq scale_sq;  // entry = numerator * sqrt(scale_sq)
  std::complex<double> value;
};

CodewordEntry codeword_entry(const Codeword& w, std::int64_t k);

/// Index triple of a phase codeword F_{a,b,u}.
struct PhaseIndex {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t u = 0;
};

/// An (N, K) codebook: the phase family F_{a,b,u} (a in Z_{p_min}, b, u in
/// Z_q, lexicographic) followed by the K standard-basis words.
///
/// Coordinates are flattened i-major, j-minor. Construction two drops row
/// i = ell, so its coordinate r*q + j refers to the r-th surviving row.
class Codebook {
 public:
  Modulus q() const noexcept { return q_; }
  std::int64_t p_min() const noexcept { return p_min_; }
  ConstructionKind construction() const noexcept { return kind_; }
  std::optional<std::int64_t> ell() const noexcept { return ell_; }
  const PermutationZQ& pi() const noexcept { return pi_; }
  const PermutationZQ& sigma() const noexcept { return sigma_; }

  std::int64_t size() const noexcept { return n_phase() + k_; }  // N
  std::int64_t length() const noexcept { return k_; }            // K
  std::int64_t n_phase() const noexcept { return exponents_.rows(); }

  const ExponentMatrix& exponents() const noexcept { return exponents_; }
  /// Squared scale of every phase word, 1/K.
  RationalMagnitudeSq phase_scale_sq() const { return {1, k_}; }

  bool is_phase(std::int64_t n) const noexcept { return n < n_phase(); }
  PhaseIndex phase_index(std::int64_t n) const;
  std::int64_t phase_word(const PhaseIndex& idx) const;

  /// Z_q rows that survive (all of Z_q for construction one).
  std::vector<std::int64_t> rows() const;

  Codeword codeword(std::int64_t n) const;

  friend Codebook build_construction_one(Modulus, const PermutationZQ&, const PermutationZQ&);
  friend Codebook build_construction_two(Modulus, const PermutationZQ&, const PermutationZQ&, std::int64_t);

 private:
  Codebook(Modulus q, ConstructionKind kind, std::optional<std::int64_t> ell, PermutationZQ pi, PermutationZQ sigma);
  void fill();

  Modulus q_;
  std::int64_t p_min_;
  ConstructionKind kind_;
  std::optional<std::int64_t> ell_;
  PermutationZQ pi_;
  PermutationZQ sigma_;
  std::int64_t k_ = 0;
  ExponentMatrix exponents_;
};

/// ((p_min+1) q^2, q^2) codebook with I_max = 1/q.
Codebook build_construction_one(Modulus q, const PermutationZQ& pi, const PermutationZQ& sigma);

/// (p_min q^2 + q^2 - q, q(q-1)) codebook, row ell deleted. Needs q >= 3.
Codebook build_construction_two(Modulus q, const PermutationZQ& pi, const PermutationZQ& sigma, std::int64_t ell);

/// Closed-form (N, K) for the given construction.
struct CodebookParams {
  std::int64_t p_min;
  std::int64_t q;
  std::int64_t n;
  std::int64_t k;
};
CodebookParams construction_params(ConstructionKind kind, std::int64_t q);

/// Dense complex rows, phase words first then basis words.
template <typename Scalar>
using ComplexMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename Scalar>
ComplexMatrix<Scalar> materialize(const Codebook& cb) {
  using C = std::complex<Scalar>;
  const auto q = cb.q().value();
  std::vector<C> roots(static_cast<std::size_t>(q));
  const Scalar scale = Scalar(1) / std::sqrt(static_cast<Scalar>(cb.length()));
  for (std::int64_t e = 0; e < q; ++e) {
    const long double angle = 2.0L * 3.14159265358979323846264338327950288L * e / q;
    roots[static_cast<std::size_t>(e)] =
        C(static_cast<Scalar>(std::cos(angle)), static_cast<Scalar>(std::sin(angle))) * scale;
  }
  ComplexMatrix<Scalar> m = ComplexMatrix<Scalar>::Zero(cb.size(), cb.length());
  const auto& ex = cb.exponents();
  for (Eigen::Index r = 0; r < ex.rows(); ++r) {
    for (Eigen::Index c = 0; c < ex.cols(); ++c) m(r, c) = roots[static_cast<std::size_t>(ex(r, c))];
  }
  for (std::int64_t k = 0; k < cb.length(); ++k) m(cb.n_phase() + k, k) = C(1);
  return m;
}

}  // namespace bentcodes
