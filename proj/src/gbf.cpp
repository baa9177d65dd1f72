#include "bentcodes/gbf.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "bentcodes/parallel.hpp"

namespace bentcodes {

PermutationZQ::PermutationZQ(Modulus q, std::vector<std::int64_t> images) : q_(q), images_(std::move(images)) {
  if (images_.size() != static_cast<std::size_t>(q.value()))
    throw std::invalid_argument("permutation: expected " + std::to_string(q.value()) + " images, got " +
                                std::to_string(images_.size()));
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v < 0 || v >= q.value()) throw std::invalid_argument("permutation: image " + std::to_string(v) + " out of range");
    if (seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("permutation: image " + std::to_string(v) + " repeated, not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

PermutationZQ PermutationZQ::identity(Modulus q) { return affine(q, 1, 0); }

PermutationZQ PermutationZQ::affine(Modulus q, std::int64_t c, std::int64_t d) {
  if (gcd(Residue::reduce(c, q), q.value()) != 1)
    throw std::invalid_argument("affine permutation: gcd(c, q) must be 1");
  std::vector<std::int64_t> img(static_cast<std::size_t>(q.value()));
  for (std::int64_t x = 0; x < q.value(); ++x) {
    img[static_cast<std::size_t>(x)] =
        Residue::reduce(static_cast<std::int64_t>((static_cast<__int128>(c) * x + d) % q.value()), q);
  }
  return PermutationZQ(q, std::move(img));
}

namespace {
// Uniform draw in [0, bound] by rejection; avoids std distributions, whose
// output is implementation defined.
std::uint64_t draw_upto(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) return 0;
  const std::uint64_t range = bound + 1;
  const std::uint64_t limit = range == 0 ? 0 : (~std::uint64_t{0} - range + 1) % range;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= limit) return r % range;
  }
}
}  // namespace

PermutationZQ PermutationZQ::seeded(Modulus q, std::uint64_t seed) {
  std::vector<std::int64_t> img(static_cast<std::size_t>(q.value()));
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = static_cast<std::int64_t>(i);
  std::mt19937_64 rng(seed);
  for (std::size_t i = img.size() - 1; i > 0; --i) std::swap(img[i], img[draw_upto(rng, i)]);
  return PermutationZQ(q, std::move(img));
}

std::int64_t checked_table_size(Modulus q, int arity) {
  if (arity < 1) throw std::invalid_argument("function arity must be >= 1");
  std::int64_t n = 1;
  for (int k = 0; k < arity; ++k) {
    n *= q.value();
    if (n > FunctionZQ::kMaxTableSize)
      throw std::invalid_argument("q^m exceeds the table guard of " + std::to_string(FunctionZQ::kMaxTableSize));
  }
  return n;
}

FunctionZQ::FunctionZQ(Modulus q, int arity, std::vector<std::int64_t> table)
    : q_(q), m_(arity), table_(std::move(table)) {
  if (static_cast<std::int64_t>(table_.size()) != checked_table_size(q, arity))
    throw std::invalid_argument("function table must have q^m entries");
  for (auto v : table_) {
    if (v < 0 || v >= q.value()) throw std::invalid_argument("function value " + std::to_string(v) + " outside [0, q)");
  }
}

FunctionZQ FunctionZQ::constant(Modulus q, int arity, std::int64_t value) {
  return FunctionZQ(q, arity, std::vector<std::int64_t>(static_cast<std::size_t>(checked_table_size(q, arity)),
                                                        Residue::reduce(value, q)));
}

std::int64_t FunctionZQ::operator()(std::span<const std::int64_t> x) const {
  if (static_cast<int>(x.size()) != m_) throw std::invalid_argument("function: arity mismatch");
  std::size_t idx = 0;
  for (auto c : x) idx = idx * static_cast<std::size_t>(q_.value()) + static_cast<std::size_t>(Residue::reduce(c, q_));
  return table_[idx];
}

std::vector<std::int64_t> FunctionZQ::point(std::size_t idx) const {
  std::vector<std::int64_t> x(static_cast<std::size_t>(m_));
  for (int k = m_ - 1; k >= 0; --k) {
    x[static_cast<std::size_t>(k)] = static_cast<std::int64_t>(idx % static_cast<std::size_t>(q_.value()));
    idx /= static_cast<std::size_t>(q_.value());
  }
  return x;
}

namespace {

// counts[d] = #{x : f(x) - a.x = d (mod q)}
std::vector<std::int64_t> phase_counts(const FunctionZQ& f, std::span<const std::int64_t> a) {
  if (static_cast<int>(a.size()) != f.arity()) throw std::invalid_argument("fourier_coefficient: arity mismatch");
  const std::int64_t q = f.modulus().value();
  for (auto c : a) {
    if (c < 0 || c >= q) throw std::invalid_argument("fourier_coefficient: a outside Z_q^m");
  }
  std::vector<std::int64_t> counts(static_cast<std::size_t>(q), 0);
  std::vector<std::int64_t> x(a.size(), 0);
  std::int64_t dot = 0;  // a.x mod q, maintained incrementally
  for (std::size_t idx = 0; idx < f.size(); ++idx) {
    counts[static_cast<std::size_t>(Residue::reduce(f.table()[idx] - dot, f.modulus()))] += 1;
    // odometer increment, last coordinate fastest
    for (std::size_t k = a.size(); k-- > 0;) {
      dot = (dot + a[k]) % q;
      if (++x[k] < q) break;
      x[k] = 0;  // wrapped: a_k * q = 0 mod q, dot already consistent
    }
  }
  return counts;
}

}  // namespace

FourierCoefficient fourier_coefficient(const FunctionZQ& f, std::span<const std::int64_t> a) {
  auto sum = CyclotomicInt::from_counts(f.modulus(), phase_counts(f, a));
  const auto value = sum.evaluate() / std::sqrt(static_cast<double>(f.size()));
  return {std::move(sum), value};
}

BentReport is_generalized_bent(const FunctionZQ& f, unsigned threads) {
  const std::size_t n = f.size();
  BentReport rep;
  rep.abs_sq.resize(n);
  rep.magnitude.resize(n);
  const BigInt target = static_cast<std::int64_t>(n);
  parallel_chunks(n, threads, [&](std::size_t b, std::size_t e, unsigned) {
    for (std::size_t idx = b; idx < e; ++idx) {
      const auto a = f.point(idx);
      const auto counts = phase_counts(f, a);
      rep.abs_sq[idx] = abs_squared_counts(f.modulus(), counts);
      rep.magnitude[idx] = std::abs(CyclotomicInt::from_counts(f.modulus(), counts).evaluate()) /
                           std::sqrt(static_cast<double>(n));
    }
  });
  rep.bent = true;
  for (const auto& v : rep.abs_sq) {
    if (!v || *v != target) {
      rep.bent = false;
      break;
    }
  }
  return rep;
}

FunctionZQ make_kumar_gbf(const PermutationZQ& omega, const FunctionZQ& theta) {
  if (omega.modulus() != theta.modulus()) throw std::invalid_argument("make_kumar_gbf: modulus mismatch");
  if (theta.arity() != 1) throw std::invalid_argument("make_kumar_gbf: theta must be unary");
  const Modulus q = omega.modulus();
  const auto n = static_cast<std::size_t>(q.value());
  std::vector<std::int64_t> table(n * n);
  for (std::size_t x1 = 0; x1 < n; ++x1) {
    for (std::size_t x2 = 0; x2 < n; ++x2) {
      table[x1 * n + x2] = (static_cast<std::int64_t>(x2) * omega.images()[x1] + theta.table()[x1]) % q.value();
    }
  }
  return FunctionZQ(q, 2, std::move(table));
}

}  // namespace bentcodes
