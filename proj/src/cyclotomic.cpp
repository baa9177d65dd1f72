#include "bentcodes/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace bentcodes {

RationalMagnitudeSq::RationalMagnitudeSq(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ <= 0) throw std::invalid_argument("RationalMagnitudeSq: denominator must be positive");
  if (num_ < 0) throw std::invalid_argument("RationalMagnitudeSq: numerator must be nonnegative");
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  const BigInt g = boost::multiprecision::gcd(num_, den_);
  num_ /= g;
  den_ /= g;
}

double RationalMagnitudeSq::to_double() const {
  return num_.convert_to<double>() / den_.convert_to<double>();
}

std::string RationalMagnitudeSq::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

namespace {

using Poly = std::vector<BigInt>;

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact quotient of a by a monic divisor b.
Poly divide_exact(Poly a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) throw std::logic_error("divide_exact: degree too small");
  Poly quot(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const BigInt c = a[i];
    if (c == 0) continue;
    quot[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (a[i] != 0) throw std::logic_error("divide_exact: nonzero remainder");
  }
  trim(quot);
  return quot;
}

std::mutex g_phi_mutex;
std::map<std::int64_t, std::shared_ptr<const Poly>> g_phi_cache;

}  // namespace

std::shared_ptr<const std::vector<BigInt>> cyclotomic_polynomial(std::int64_t q) {
  if (q < 1) throw std::invalid_argument("cyclotomic_polynomial: q must be >= 1");
  {
    std::lock_guard lock(g_phi_mutex);
    if (auto it = g_phi_cache.find(q); it != g_phi_cache.end()) return it->second;
  }
  // Phi_q = (x^q - 1) / prod_{d | q, d < q} Phi_d
  Poly p(static_cast<std::size_t>(q) + 1, 0);
  p[0] = -1;
  p[q] = 1;
  for (std::int64_t d = 1; d < q; ++d) {
    if (q % d == 0) p = divide_exact(std::move(p), *cyclotomic_polynomial(d));
  }
  auto built = std::make_shared<const Poly>(std::move(p));
  std::lock_guard lock(g_phi_mutex);
  return g_phi_cache.try_emplace(q, std::move(built)).first->second;
}

CyclotomicInt::CyclotomicInt(Modulus q) : q_(q), coeffs_(static_cast<std::size_t>(q.value()), 0) {}

CyclotomicInt::CyclotomicInt(Modulus q, std::vector<BigInt> coeffs) : q_(q), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != static_cast<std::size_t>(q.value()))
    throw std::invalid_argument("CyclotomicInt: need exactly q coefficients");
}

CyclotomicInt CyclotomicInt::from_integer(Modulus q, const BigInt& n) {
  CyclotomicInt x(q);
  x.coeffs_[0] = n;
  return x;
}

CyclotomicInt CyclotomicInt::from_counts(Modulus q, std::span<const std::int64_t> counts) {
  if (counts.size() != static_cast<std::size_t>(q.value()))
    throw std::invalid_argument("CyclotomicInt::from_counts: need exactly q counts");
  CyclotomicInt x(q);
  for (std::size_t k = 0; k < counts.size(); ++k) x.coeffs_[k] = counts[k];
  return x;
}

namespace {
void check_same(const CyclotomicInt& x, const CyclotomicInt& y) {
  if (x.modulus() != y.modulus()) throw std::invalid_argument("CyclotomicInt: modulus mismatch");
}
}  // namespace

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& y) {
  check_same(*this, y);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += y.coeffs_[k];
  return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& y) {
  check_same(*this, y);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= y.coeffs_[k];
  return *this;
}

CyclotomicInt operator-(CyclotomicInt x) {
  for (auto& c : x.coeffs_) c = -c;
  return x;
}

CyclotomicInt operator*(const CyclotomicInt& x, const CyclotomicInt& y) {
  check_same(x, y);
  const std::size_t q = x.coeffs_.size();
  CyclotomicInt out(x.q_);
  for (std::size_t i = 0; i < q; ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < q; ++j) {
      if (y.coeffs_[j] == 0) continue;
      std::size_t k = i + j;
      if (k >= q) k -= q;
      out.coeffs_[k] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  return out;
}

std::complex<double> CyclotomicInt::evaluate() const {
  const double q = static_cast<double>(q_.value());
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    sum += coeffs_[k].convert_to<double>() * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / q);
  }
  return sum;
}

CyclotomicInt root_power(Modulus q, std::int64_t k) {
  std::vector<BigInt> c(static_cast<std::size_t>(q.value()), 0);
  c[static_cast<std::size_t>(Residue::reduce(k, q))] = 1;
  return CyclotomicInt(q, std::move(c));
}

CyclotomicInt conj(const CyclotomicInt& x) {
  const auto& c = x.coeffs();
  const std::size_t q = c.size();
  std::vector<BigInt> out(q, 0);
  out[0] = c[0];
  for (std::size_t k = 1; k < q; ++k) out[q - k] = c[k];
  return CyclotomicInt(x.modulus(), std::move(out));
}

namespace {

// In-place remainder of a polynomial of degree < q modulo the monic Phi_q.
void reduce_mod_phi(Poly& r, const Poly& phi) {
  const std::size_t d = phi.size() - 1;
  for (std::size_t i = r.size(); i-- > d;) {
    if (r[i] == 0) continue;
    const BigInt c = r[i];
    for (std::size_t j = 0; j < d; ++j) {
      if (phi[j] != 0) r[i - d + j] -= c * phi[j];
    }
    r[i] = 0;
  }
  r.resize(d);
}

std::optional<BigInt> rational_of_reduced(const Poly& r) {
  for (std::size_t k = 1; k < r.size(); ++k) {
    if (r[k] != 0) return std::nullopt;
  }
  return r.empty() ? BigInt(0) : r[0];
}

}  // namespace

std::vector<BigInt> canonical_coeffs(const CyclotomicInt& x) {
  Poly r = x.coeffs();
  reduce_mod_phi(r, *cyclotomic_polynomial(x.modulus().value()));
  return r;
}

bool is_zero(const CyclotomicInt& x) {
  for (const auto& c : canonical_coeffs(x)) {
    if (c != 0) return false;
  }
  return true;
}

std::optional<BigInt> rational_value(const CyclotomicInt& x) { return rational_of_reduced(canonical_coeffs(x)); }

std::optional<BigInt> abs_squared(const CyclotomicInt& x) { return rational_value(x * conj(x)); }

std::optional<BigInt> abs_squared_counts(Modulus q, std::span<const std::int64_t> counts) {
  const std::size_t n = static_cast<std::size_t>(q.value());
  if (counts.size() != n) throw std::invalid_argument("abs_squared_counts: need exactly q counts");
  std::int64_t total = 0;
  for (auto c : counts) total += c < 0 ? -c : c;
  if (total > 3'000'000'000LL) return abs_squared(CyclotomicInt::from_counts(q, counts));

  // (sum_d n_d xi^d)(sum_e n_e xi^-e): coefficient of xi^t is sum_d n_d n_{d-t}.
  Poly prod(n, 0);
  for (std::size_t t = 0; t < n; ++t) {
    std::int64_t acc = 0;
    for (std::size_t d = 0; d < n; ++d) {
      const std::size_t e = d >= t ? d - t : d + n - t;
      acc += counts[d] * counts[e];
    }
    prod[t] = acc;
  }
  reduce_mod_phi(prod, *cyclotomic_polynomial(q.value()));
  return rational_of_reduced(prod);
}

}  // namespace bentcodes
