#include "bentcodes/construction.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bentcodes {

Codeword Codeword::standard_basis(Modulus q, std::int64_t length, std::int64_t index) {
  if (index < 0 || index >= length) throw std::invalid_argument("standard basis index out of range");
  Codeword w;
  w.kind = CodewordKind::StandardBasis;
  w.q = q;
  w.length = length;
  w.basis_index = index;
  w.scale_sq = {1, 1};
  return w;
}

Codeword Codeword::phase(Modulus q, std::vector<std::int64_t> exponents) {
  if (exponents.empty()) throw std::invalid_argument("phase codeword must be nonempty");
  Codeword w;
  w.kind = CodewordKind::Phase;
  w.q = q;
  w.length = static_cast<std::int64_t>(exponents.size());
  for (auto& e : exponents) e = Residue::reduce(e, q);
  w.exponents = std::move(exponents);
  w.scale_sq = {1, w.length};
  return w;
}

CodewordEntry codeword_entry(const Codeword& w, std::int64_t k) {
  if (k < 0 || k >= w.length) throw std::out_of_range("codeword_entry: index out of range");
  if (w.kind == CodewordKind::StandardBasis) {
    const std::int64_t v = k == w.basis_index ? 1 : 0;
    return {CyclotomicInt::from_integer(w.q, v), w.scale_sq, {static_cast<double>(v), 0.0}};
  }
  const std::int64_t e = w.exponents[static_cast<std::size_t>(k)];
  const double scale = std::sqrt(w.scale_sq.to_double());
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(w.q.value());
  return {root_power(w.q, e), w.scale_sq, std::polar(scale, angle)};
}

CodebookParams construction_params(ConstructionKind kind, std::int64_t q) {
  const std::int64_t p = smallest_prime_factor(q);
  if (kind == ConstructionKind::One) return {p, q, (p + 1) * q * q, q * q};
  if (q < 3) throw std::invalid_argument("construction two requires q >= 3");
  return {p, q, p * q * q + q * q - q, q * (q - 1)};
}

Codebook::Codebook(Modulus q, ConstructionKind kind, std::optional<std::int64_t> ell, PermutationZQ pi,
                   PermutationZQ sigma)
    : q_(q), p_min_(smallest_prime_factor(q.value())), kind_(kind), ell_(ell), pi_(std::move(pi)),
      sigma_(std::move(sigma)) {
  if (pi_.modulus() != q || sigma_.modulus() != q)
    throw std::invalid_argument("permutations must be defined on Z_q");
  fill();
}

std::vector<std::int64_t> Codebook::rows() const {
  std::vector<std::int64_t> out;
  for (std::int64_t i = 0; i < q_.value(); ++i) {
    if (!ell_ || i != *ell_) out.push_back(i);
  }
  return out;
}

void Codebook::fill() {
  const std::int64_t q = q_.value();
  const auto row_list = rows();
  k_ = static_cast<std::int64_t>(row_list.size()) * q;
  exponents_.resize(p_min_ * q * q, k_);
  // exponent at (i, j) = j*(a*pi(i) + b) + u*sigma(i) mod q
  for (std::int64_t a = 0; a < p_min_; ++a) {
    for (std::int64_t b = 0; b < q; ++b) {
      for (std::int64_t u = 0; u < q; ++u) {
        const Eigen::Index n = (a * q + b) * q + u;
        Eigen::Index col = 0;
        for (const std::int64_t i : row_list) {
          const std::int64_t slope = (a * pi_(i) + b) % q;
          const std::int64_t offset = (u * sigma_(i)) % q;
          for (std::int64_t j = 0; j < q; ++j, ++col) {
            exponents_(n, col) = static_cast<std::int32_t>((j * slope + offset) % q);
          }
        }
      }
    }
  }
}

PhaseIndex Codebook::phase_index(std::int64_t n) const {
  if (!is_phase(n) || n < 0) throw std::out_of_range("phase_index: not a phase codeword");
  const std::int64_t q = q_.value();
  return {n / (q * q), (n / q) % q, n % q};
}

std::int64_t Codebook::phase_word(const PhaseIndex& idx) const {
  const std::int64_t q = q_.value();
  if (idx.a < 0 || idx.a >= p_min_ || idx.b < 0 || idx.b >= q || idx.u < 0 || idx.u >= q)
    throw std::out_of_range("phase_word: index outside Z_p x Z_q x Z_q");
  return (idx.a * q + idx.b) * q + idx.u;
}

Codeword Codebook::codeword(std::int64_t n) const {
  if (n < 0 || n >= size()) throw std::out_of_range("codeword index out of range");
  if (!is_phase(n)) return Codeword::standard_basis(q_, k_, n - n_phase());
  std::vector<std::int64_t> ex(static_cast<std::size_t>(k_));
  for (std::int64_t c = 0; c < k_; ++c) ex[static_cast<std::size_t>(c)] = exponents_(n, c);
  return Codeword::phase(q_, std::move(ex));
}

namespace {
constexpr std::int64_t kMaxExponent = 65535;
constexpr std::int64_t kMaxEntries = 100'000'000;

void check_storage(ConstructionKind kind, Modulus q) {
  const auto prm = construction_params(kind, q.value());
  if ((prm.n - prm.k) > kMaxEntries / prm.k)
    throw std::invalid_argument("codebook at q=" + std::to_string(q.value()) + " exceeds the exponent storage guard");
}
}  // namespace

Codebook build_construction_one(Modulus q, const PermutationZQ& pi, const PermutationZQ& sigma) {
  if (q.value() > kMaxExponent) throw std::invalid_argument("q too large to build explicitly");
  check_storage(ConstructionKind::One, q);
  return Codebook(q, ConstructionKind::One, std::nullopt, pi, sigma);
}

Codebook build_construction_two(Modulus q, const PermutationZQ& pi, const PermutationZQ& sigma, std::int64_t ell) {
  if (q.value() < 3) throw std::invalid_argument("construction two requires q >= 3, got " + std::to_string(q.value()));
  if (q.value() > kMaxExponent) throw std::invalid_argument("q too large to build explicitly");
  if (ell < 0 || ell >= q.value()) throw std::invalid_argument("ell must lie in [0, q)");
  check_storage(ConstructionKind::Two, q);
  return Codebook(q, ConstructionKind::Two, ell, pi, sigma);
}

}  // namespace bentcodes
