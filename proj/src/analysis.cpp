#include "bentcodes/analysis.hpp"

#include <algorithm>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

namespace bentcodes {

using boost::multiprecision::cpp_rational;

const char* to_string(SweepMode m) {
  switch (m) {
    case SweepMode::Exact: return "exact";
    case SweepMode::Float: return "float";
    case SweepMode::Both: return "both";
  }
  return "?";
}

const char* to_string(SweepMethod m) {
  switch (m) {
    case SweepMethod::BruteForce: return "brute_force";
    case SweepMethod::SymmetryReduced: return "symmetry_reduced";
    case SweepMethod::Dense: return "dense";
  }
  return "?";
}

const char* to_string(PairKind k) {
  switch (k) {
    case PairKind::PhasePhase: return "phase_phase";
    case PairKind::BasisPhase: return "basis_phase";
    case PairKind::BasisBasis: return "basis_basis";
  }
  return "?";
}

bool CorrelationReport::consistent() const {
  if (mode == SweepMode::Both && max_float_exact_gap >= kFloatExactTolerance) return false;
  if (mode != SweepMode::Exact && max_snap_residual > kSnapTolerance) return false;
  std::uint64_t total = 0;
  for (const auto& [v, c] : histogram) total += c;
  if (n >= 2 && total != static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Single pair

CorrelationValue inner_product(const Codeword& c1, const Codeword& c2) {
  if (c1.length != c2.length) throw std::invalid_argument("inner_product: length mismatch");
  if (c1.q != c2.q) throw std::invalid_argument("inner_product: modulus mismatch");
  const std::int64_t q = c1.q.value();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(q), 0);
  std::complex<double> fsum{0.0, 0.0};
  for (std::int64_t k = 0; k < c1.length; ++k) {
    const auto e1 = codeword_entry(c1, k);
    const auto e2 = codeword_entry(c2, k);
    fsum += e1.value * std::conj(e2.value);
    // Entries are 0 or a single root of unity; record the exponent difference.
    const bool z1 = c1.kind == CodewordKind::StandardBasis && k != c1.basis_index;
    const bool z2 = c2.kind == CodewordKind::StandardBasis && k != c2.basis_index;
    if (z1 || z2) continue;
    const std::int64_t x1 = c1.kind == CodewordKind::Phase ? c1.exponents[static_cast<std::size_t>(k)] : 0;
    const std::int64_t x2 = c2.kind == CodewordKind::Phase ? c2.exponents[static_cast<std::size_t>(k)] : 0;
    counts[static_cast<std::size_t>(Residue::reduce(x1 - x2, c1.q))] += 1;
  }
  const auto abs_sq = abs_squared_counts(c1.q, counts);
  if (!abs_sq) throw std::runtime_error("inner_product: |S|^2 is not a rational integer");
  return {RationalMagnitudeSq(*abs_sq, 1) * c1.scale_sq * c2.scale_sq, std::abs(fsum)};
}

// ---------------------------------------------------------------------------
// Sweeps

namespace {

// Partial result of one worker. Keys are numerators over the per-kind
// denominator (K^2, K, 1); weights may be doubled by the symmetry path.
struct Accumulator {
  std::array<std::unordered_map<std::int64_t, std::uint64_t>, 3> counts;
  double max_float = 0.0;
  double gap = 0.0;
  double snap = 0.0;

  void merge(const Accumulator& o) {
    for (std::size_t k = 0; k < 3; ++k) {
      for (const auto& [num, c] : o.counts[k]) counts[k][num] += c;
    }
    max_float = std::max(max_float, o.max_float);
    gap = std::max(gap, o.gap);
    snap = std::max(snap, o.snap);
  }
};

struct SweepContext {
  const Codebook& cb;
  std::int64_t q;
  std::int64_t k;
  std::array<std::int64_t, 3> den;

  explicit SweepContext(const Codebook& c)
      : cb(c), q(c.q().value()), k(c.length()), den{c.length() * c.length(), c.length(), 1} {}

  PairKind kind(std::int64_t i, std::int64_t j) const {
    const bool pi = cb.is_phase(i), pj = cb.is_phase(j);
    if (pi && pj) return PairKind::PhasePhase;
    if (pi || pj) return PairKind::BasisPhase;
    return PairKind::BasisBasis;
  }

  // Exact |S|^2 (numerator over den[kind]) for codewords i and j.
  std::int64_t exact_numerator(std::int64_t i, std::int64_t j, std::vector<std::int64_t>& counts) const {
    std::fill(counts.begin(), counts.end(), 0);
    const auto& ex = cb.exponents();
    const bool pi = cb.is_phase(i), pj = cb.is_phase(j);
    if (pi && pj) {
      const auto* r1 = ex.row(i).data();
      const auto* r2 = ex.row(j).data();
      for (std::int64_t c = 0; c < k; ++c) {
        std::int64_t d = static_cast<std::int64_t>(r1[c]) - r2[c];
        if (d < 0) d += q;
        counts[static_cast<std::size_t>(d)] += 1;
      }
    } else if (pi || pj) {
      const std::int64_t phase = pi ? i : j;
      const std::int64_t col = (pi ? j : i) - cb.n_phase();
      const std::int64_t e = ex(phase, col);
      counts[static_cast<std::size_t>(pi ? e : (q - e) % q)] += 1;
    } else if (i == j) {
      counts[0] = 1;
    }
    const auto v = abs_squared_counts(cb.q(), counts);
    if (!v) {
      throw std::runtime_error("internal consistency failure: |<c" + std::to_string(i) + ", c" + std::to_string(j) +
                               ">|^2 is not rational");
    }
    return v->convert_to<std::int64_t>();
  }
};

void record(Accumulator& acc, const SweepContext& ctx, PairKind kind, SweepMode mode, std::optional<std::int64_t> exact,
            std::optional<double> float_sq, std::uint64_t weight) {
  const auto kk = static_cast<std::size_t>(kind);
  const double den = static_cast<double>(ctx.den[kk]);
  std::int64_t key = 0;
  if (exact) key = *exact;
  if (float_sq) {
    acc.max_float = std::max(acc.max_float, std::sqrt(*float_sq));
    const double scaled = *float_sq * den;
    const double snapped = std::round(scaled);
    if (mode == SweepMode::Float) {
      key = static_cast<std::int64_t>(snapped);
      acc.snap = std::max(acc.snap, std::abs(scaled - snapped) / den);
    } else {
      acc.gap = std::max(acc.gap, std::abs(*float_sq - static_cast<double>(*exact) / den));
    }
  }
  acc.counts[kk][key] += weight;
}

CorrelationReport finish(const SweepContext& ctx, const Accumulator& acc, SweepMethod method, SweepMode mode,
                         std::uint64_t weight_divisor) {
  CorrelationReport rep;
  rep.n = ctx.cb.size();
  rep.k = ctx.k;
  rep.method = method;
  rep.mode = mode;
  for (std::size_t kk = 0; kk < 3; ++kk) {
    for (const auto& [num, c] : acc.counts[kk]) {
      if (c % weight_divisor != 0) throw std::logic_error("symmetry weights did not pair up");
      const RationalMagnitudeSq v(num, ctx.den[kk]);
      rep.by_kind[kk][v] += c / weight_divisor;
      rep.histogram[v] += c / weight_divisor;
      rep.pairs += c / weight_divisor;
    }
  }
  rep.imax_sq = rep.histogram.empty() ? RationalMagnitudeSq{} : rep.histogram.rbegin()->first;
  rep.imax_float = mode == SweepMode::Exact ? std::sqrt(rep.imax_sq.to_double()) : acc.max_float;
  rep.max_float_exact_gap = acc.gap;
  rep.max_snap_residual = acc.snap;
  if (rep.n > rep.k) {
    rep.welch_bound = welch_bound(rep.n, rep.k).value;
    rep.ratio = rep.imax_float / rep.welch_bound;
  }
  return rep;
}

}  // namespace

void check_sweep_guard(std::int64_t n, std::int64_t k, SweepMode mode) {
  if (n < 2) throw std::invalid_argument("sweep needs N >= 2");
  if (mode != SweepMode::Float && n > kExactSweepGuard)
    throw std::invalid_argument("exact sweep guard exceeded: N = " + std::to_string(n) + " > " +
                                std::to_string(kExactSweepGuard));
  if (mode != SweepMode::Exact && n * k > kFloatSweepGuard)
    throw std::invalid_argument("float sweep guard exceeded: N*K = " + std::to_string(n * k));
}

CorrelationReport imax_bruteforce(const Codebook& cb, const SweepOptions& opt) {
  check_sweep_guard(cb.size(), cb.length(), opt.mode);
  const SweepContext ctx(cb);
  const std::int64_t n = cb.size();
  const std::int64_t tile = std::max<std::int64_t>(1, opt.tile);
  const bool want_float = opt.mode != SweepMode::Exact;
  const bool want_exact = opt.mode != SweepMode::Float;

  ComplexMatrix<double> m;
  if (want_float) m = materialize<double>(cb);

  // Upper-triangular tile pairs, in a fixed order.
  std::vector<std::pair<std::int64_t, std::int64_t>> tiles;
  for (std::int64_t ti = 0; ti < n; ti += tile) {
    for (std::int64_t tj = ti; tj < n; tj += tile) tiles.emplace_back(ti, tj);
  }

  const unsigned threads = std::max(1u, opt.threads);
  std::vector<Accumulator> parts(threads);
  parallel_chunks(tiles.size(), threads, [&](std::size_t b, std::size_t e, unsigned w) {
    Accumulator& acc = parts[w];
    std::vector<std::int64_t> counts(static_cast<std::size_t>(ctx.q));
    Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic> gram;
    for (std::size_t t = b; t < e; ++t) {
      const auto [i0, j0] = tiles[t];
      const std::int64_t bi = std::min(tile, n - i0);
      const std::int64_t bj = std::min(tile, n - j0);
      if (want_float) gram.noalias() = m.middleRows(i0, bi) * m.middleRows(j0, bj).adjoint();
      for (std::int64_t di = 0; di < bi; ++di) {
        const std::int64_t i = i0 + di;
        for (std::int64_t dj = 0; dj < bj; ++dj) {
          const std::int64_t j = j0 + dj;
          if (j <= i) continue;
          std::optional<std::int64_t> exact;
          std::optional<double> fsq;
          if (want_exact) exact = ctx.exact_numerator(i, j, counts);
          if (want_float) fsq = std::norm(gram(di, dj));
          record(acc, ctx, ctx.kind(i, j), opt.mode, exact, fsq, 1);
        }
      }
    }
  });
  Accumulator total;
  for (const auto& p : parts) total.merge(p);
  return finish(ctx, total, SweepMethod::BruteForce, opt.mode, 1);
}

CorrelationReport imax_symmetry(const Codebook& cb, const SweepOptions& opt) {
  check_sweep_guard(cb.size(), cb.length(), opt.mode == SweepMode::Float ? SweepMode::Float : SweepMode::Exact);
  const SweepContext ctx(cb);
  const std::int64_t q = ctx.q;
  const std::int64_t p = cb.p_min();
  const std::int64_t k = ctx.k;
  const bool want_float = opt.mode != SweepMode::Exact;
  const bool want_exact = opt.mode != SweepMode::Float;
  const std::int64_t n_classes = p * q * q;  // class 0 is (0,0,0) and skipped
  const std::int64_t origin = cb.phase_word({0, 0, 0});

  std::vector<std::complex<double>> roots(static_cast<std::size_t>(q));
  for (std::int64_t e = 0; e < q; ++e) {
    roots[static_cast<std::size_t>(e)] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) / q);
  }

  const unsigned threads = std::max(1u, opt.threads);
  std::vector<Accumulator> parts(threads);
  parallel_chunks(static_cast<std::size_t>(n_classes - 1), threads, [&](std::size_t b, std::size_t e, unsigned w) {
    Accumulator& acc = parts[w];
    std::vector<std::int64_t> counts(static_cast<std::size_t>(q));
    for (std::size_t c = b + 1; c < e + 1; ++c) {
      const auto cls = static_cast<std::int64_t>(c);
      const PhaseIndex delta{cls / (q * q), (cls / q) % q, cls % q};
      const std::int64_t rep_word = cb.phase_word(delta);
      // Ordered pairs with this difference and da >= 0, counted twice for
      // da > 0 so that da = 0 classes (seen from both ends) stay integral.
      const std::uint64_t weight = static_cast<std::uint64_t>(delta.a > 0 ? 2 * (p - delta.a) * q * q : p * q * q);
      std::optional<std::int64_t> exact;
      std::optional<double> fsq;
      if (want_exact) exact = ctx.exact_numerator(rep_word, origin, counts);
      if (want_float) {
        std::complex<double> s{0.0, 0.0};
        const auto* r1 = cb.exponents().row(rep_word).data();
        const auto* r2 = cb.exponents().row(origin).data();
        for (std::int64_t col = 0; col < k; ++col) {
          std::int64_t d = static_cast<std::int64_t>(r1[col]) - r2[col];
          if (d < 0) d += q;
          s += roots[static_cast<std::size_t>(d)];
        }
        fsq = std::norm(s / static_cast<double>(k));
      }
      record(acc, ctx, PairKind::PhasePhase, opt.mode, exact, fsq, weight);
    }
  });
  Accumulator total;
  for (const auto& part : parts) total.merge(part);

  // Basis vs phase: every such pair has |<e_k, F>|^2 = 1/K. Basis vs basis: 0.
  const auto n_phase = static_cast<std::uint64_t>(cb.n_phase());
  total.counts[static_cast<std::size_t>(PairKind::BasisPhase)][1] += 2 * n_phase * static_cast<std::uint64_t>(k);
  if (k > 1) {
    total.counts[static_cast<std::size_t>(PairKind::BasisBasis)][0] +=
        static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(k - 1);
  }
  if (want_float) total.max_float = std::max(total.max_float, 1.0 / std::sqrt(static_cast<double>(k)));
  return finish(ctx, total, SweepMethod::SymmetryReduced, opt.mode, 2);
}

// ---------------------------------------------------------------------------
// Welch bound and ratios

WelchBound welch_bound(const BigInt& n, const BigInt& k) {
  if (k < 1) throw std::invalid_argument("welch_bound: K must be >= 1");
  if (n <= k) throw std::invalid_argument("welch_bound: requires N > K");
  RationalMagnitudeSq sq(n - k, (n - 1) * k);
  const double v = std::sqrt(static_cast<double>(sq.numerator().convert_to<long double>() /
                                                 sq.denominator().convert_to<long double>()));
  return {std::move(sq), v};
}

RationalMagnitudeSq welch_sq_construction_one(const BigInt& p, const BigInt& q) {
  return {p, p * q * q + q * q - 1};
}

RationalMagnitudeSq welch_sq_construction_two(const BigInt& p, const BigInt& q) {
  return {p * q, (p * q * q + q * q - q - 1) * (q - 1)};
}

bool welch_identities_hold(const BigInt& p, const BigInt& q) {
  const BigInt n1 = (p + 1) * q * q, k1 = q * q;
  const BigInt n2 = p * q * q + q * q - q, k2 = q * (q - 1);
  return welch_bound(n1, k1).squared == welch_sq_construction_one(p, q) &&
         welch_bound(n2, k2).squared == welch_sq_construction_two(p, q);
}

RationalMagnitudeSq analytic_imax_sq(ConstructionKind kind, std::int64_t q) {
  if (kind == ConstructionKind::One) return {1, BigInt(q) * q};
  return {1, BigInt(q - 1) * (q - 1)};
}

RationalMagnitudeSq stated_variant_imax_sq(std::int64_t q) { return {1, BigInt(q) * (q - 1)}; }

namespace {
double ratio_to_double(const RationalMagnitudeSq& r) {
  return static_cast<double>(r.numerator().convert_to<long double>() / r.denominator().convert_to<long double>());
}
cpp_rational as_rational(const RationalMagnitudeSq& r) { return cpp_rational(r.numerator(), r.denominator()); }
}  // namespace

RatioReport ratio_report(ConstructionKind kind, std::int64_t q) {
  RatioReport rep;
  rep.kind = kind;
  rep.params = construction_params(kind, q);
  const cpp_rational p(rep.params.p_min), Q(q);
  rep.imax_sq = analytic_imax_sq(kind, q);
  rep.welch_sq = welch_bound(rep.params.n, rep.params.k).squared;
  rep.ratio_sq = RationalMagnitudeSq(rep.imax_sq.numerator() * rep.welch_sq.denominator(),
                                     rep.imax_sq.denominator() * rep.welch_sq.numerator());
  cpp_rational closed;
  if (kind == ConstructionKind::One) {
    closed = 1 + 1 / p - 1 / (Q * Q * p);
  } else {
    closed = Q / (Q - 1) + Q / ((Q - 1) * p) - 1 / ((Q - 1) * p) - 1 / (Q * (Q - 1) * p);
  }
  rep.closed_form_holds = as_rational(rep.ratio_sq) == closed;
  rep.imax = std::sqrt(ratio_to_double(rep.imax_sq));
  rep.welch = std::sqrt(ratio_to_double(rep.welch_sq));
  rep.imax_over_welch = std::sqrt(ratio_to_double(rep.ratio_sq));
  rep.welch_over_imax = 1.0 / rep.imax_over_welch;
  if (kind == ConstructionKind::Two) {
    const auto v = stated_variant_imax_sq(q);
    rep.variant_imax = std::sqrt(ratio_to_double(v));
    rep.variant_welch_over_imax = rep.welch / *rep.variant_imax;
  }
  rep.limit_fixed_p = std::sqrt(1.0 + 1.0 / static_cast<double>(rep.params.p_min));
  return rep;
}

bool is_mwbe(const CorrelationReport& report) {
  if (report.n <= report.k) throw std::invalid_argument("is_mwbe: requires N > K");
  const auto target = welch_bound(report.n, report.k).squared;
  return report.histogram.size() == 1 && report.histogram.begin()->first == target;
}

std::string format_sig5(double v) {
  if (!std::isfinite(v)) return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
  if (v == 0.0) return "0.0000";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4e", v);  // d.dddde[+-]xx, correctly rounded
  std::string s(buf);
  std::string sign;
  if (s[0] == '-') {
    sign = "-";
    s.erase(0, 1);
  }
  const auto epos = s.find('e');
  const int exp10 = std::stoi(s.substr(epos + 1));
  std::string digits = s.substr(0, 1) + s.substr(2, epos - 2);
  std::string out;
  if (exp10 < 0) {
    out = "0." + std::string(static_cast<std::size_t>(-exp10 - 1), '0') + digits;
  } else if (exp10 < 4) {
    out = digits.substr(0, static_cast<std::size_t>(exp10) + 1) + "." + digits.substr(static_cast<std::size_t>(exp10) + 1);
  } else {
    out = digits + std::string(static_cast<std::size_t>(exp10 - 4), '0');
  }
  return sign + out;
}

std::vector<TableRow> table_rows(ConstructionKind kind, std::span<const std::int64_t> qs, bool sweep) {
  std::vector<TableRow> rows;
  rows.reserve(qs.size());
  for (const std::int64_t q : qs) {
    if (q < 2) throw std::invalid_argument("table: q must be >= 2");
    const auto r = ratio_report(kind, q);
    TableRow row;
    row.p_min = r.params.p_min;
    row.q = q;
    row.n = r.params.n;
    row.k = r.params.k;
    row.imax = r.imax;
    row.welch = r.welch;
    row.welch_over_imax = r.welch_over_imax;
    row.variant_imax = r.variant_imax;
    row.variant_welch_over_imax = r.variant_welch_over_imax;
    row.provenance = "analytic";
    if (sweep && row.n <= kExactSweepGuard) {
      const Modulus m(q);
      const auto id = PermutationZQ::identity(m);
      const Codebook cb = kind == ConstructionKind::One ? build_construction_one(m, id, id)
                                                         : build_construction_two(m, id, id, 0);
      const auto rep = imax_symmetry(cb, {.mode = SweepMode::Exact});
      if (!(rep.imax_sq == r.imax_sq))
        throw std::runtime_error("table: swept I_max disagrees with the analytic value at q=" + std::to_string(q));
      row.provenance = "swept";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Invariant suite

namespace {

std::string histogram_string(const Histogram& h) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [v, c] : h) {
    os << (first ? "" : ", ") << v.to_string() << ":" << c;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace

std::vector<InvariantResult> verify_codebook(const Codebook& cb, const SweepOptions& opt) {
  std::vector<InvariantResult> out;
  auto add = [&](std::string name, bool ok, std::string detail) {
    out.push_back({std::move(name), ok, std::move(detail)});
  };
  const auto kind = cb.construction();
  const std::int64_t q = cb.q().value();
  const auto prm = construction_params(kind, q);

  add("parameters", cb.size() == prm.n && cb.length() == prm.k && cb.n_phase() == prm.p_min * q * q,
      "N=" + std::to_string(cb.size()) + " K=" + std::to_string(cb.length()) + " expected N=" + std::to_string(prm.n) +
          " K=" + std::to_string(prm.k));

  {
    // Each phase entry is a root of unity, |xi^e|^2 = 1, so the norm is
    // (number of entries) * scale_sq.
    bool roots_ok = true;
    for (std::int64_t e = 0; e < q; ++e) {
      const auto v = abs_squared(root_power(cb.q(), e));
      roots_ok = roots_ok && v && *v == 1;
    }
    const RationalMagnitudeSq phase_norm = RationalMagnitudeSq(cb.length(), 1) * cb.phase_scale_sq();
    const bool ok = roots_ok && phase_norm == RationalMagnitudeSq(1, 1) &&
                    (cb.exponents().array() >= 0).all() && (cb.exponents().array() < q).all();
    add("unit_norm", ok, "phase norm^2 = " + phase_norm.to_string() + ", basis norm^2 = 1");
  }

  {
    std::vector<std::vector<std::int32_t>> rows(static_cast<std::size_t>(cb.n_phase()));
    for (std::int64_t r = 0; r < cb.n_phase(); ++r) {
      rows[static_cast<std::size_t>(r)].assign(cb.exponents().row(r).data(), cb.exponents().row(r).data() + cb.length());
    }
    std::sort(rows.begin(), rows.end());
    const bool distinct = std::adjacent_find(rows.begin(), rows.end()) == rows.end();
    add("distinct_phase_words", distinct, distinct ? "all phase words distinct" : "duplicate phase words");
  }

  const SweepOptions exact_opt{.mode = SweepMode::Exact, .threads = opt.threads, .tile = opt.tile};
  const auto brute = imax_bruteforce(cb, opt.mode == SweepMode::Float ? exact_opt : opt);
  const auto sym = imax_symmetry(cb, exact_opt);

  add("pair_count", brute.pairs == static_cast<std::uint64_t>(cb.size()) * static_cast<std::uint64_t>(cb.size() - 1) / 2,
      std::to_string(brute.pairs) + " pairs");

  {
    const auto imax_expected = analytic_imax_sq(kind, q);
    const RationalMagnitudeSq zero{};
    bool ok = true;
    const auto& pp = brute.by_kind[static_cast<std::size_t>(PairKind::PhasePhase)];
    const auto& bp = brute.by_kind[static_cast<std::size_t>(PairKind::BasisPhase)];
    const auto& bb = brute.by_kind[static_cast<std::size_t>(PairKind::BasisBasis)];
    for (const auto& [v, c] : pp) ok = ok && (v == zero || v == imax_expected);
    ok = ok && bp.size() == 1 && bp.begin()->first == cb.phase_scale_sq();
    ok = ok && bb.size() <= 1 && (bb.empty() || bb.begin()->first == zero);
    add("value_set", ok,
        "phase_phase=" + histogram_string(pp) + " basis_phase=" + histogram_string(bp) +
            " basis_basis=" + histogram_string(bb));
    add("imax_analytic", brute.imax_sq == imax_expected,
        "I_max^2 = " + brute.imax_sq.to_string() + ", analytic " + imax_expected.to_string());
    if (kind == ConstructionKind::Two) {
      add("imax_exceeds_stated_variant", stated_variant_imax_sq(q) < brute.imax_sq,
          "observed " + brute.imax_sq.to_string() + " vs 1/(Q(Q-1)) = " + stated_variant_imax_sq(q).to_string());
    }
  }

  add("symmetry_equals_bruteforce", sym.histogram == brute.histogram && sym.imax_sq == brute.imax_sq,
      "brute " + histogram_string(brute.histogram) + " symmetry " + histogram_string(sym.histogram));

  if (opt.mode != SweepMode::Exact) {
    const auto fl = imax_bruteforce(cb, {.mode = SweepMode::Both, .threads = opt.threads, .tile = opt.tile});
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", fl.max_float_exact_gap);
    add("float_exact_agreement", fl.max_float_exact_gap < kFloatExactTolerance, std::string("max gap ") + buf);
  }

  {
    const auto wb = welch_bound(cb.size(), cb.length());
    add("welch_sanity", brute.imax_float >= wb.value - 1e-12 && wb.squared <= brute.imax_sq,
        "I_max=" + format_sig5(brute.imax_float) + " I_W=" + format_sig5(wb.value));
  }

  if (kind == ConstructionKind::Two && q <= 8) {
    bool same = true;
    for (std::int64_t ell = 0; ell < q; ++ell) {
      const auto other = build_construction_two(cb.q(), cb.pi(), cb.sigma(), ell);
      same = same && imax_symmetry(other, exact_opt).imax_sq == brute.imax_sq;
    }
    add("ell_invariance", same, "I_max identical across ell in Z_" + std::to_string(q));
  }
  return out;
}

}  // namespace bentcodes
