#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bentcodes/construction.hpp"
#include "bentcodes/cyclotomic.hpp"
#include "bentcodes/parallel.hpp"

namespace bentcodes {

enum class SweepMode { Exact, Float, Both };
enum class SweepMethod { BruteForce, SymmetryReduced, Dense };
enum class PairKind { PhasePhase = 0, BasisPhase = 1, BasisBasis = 2 };

const char* to_string(SweepMode m);
const char* to_string(SweepMethod m);
const char* to_string(PairKind k);

struct CorrelationValue {
  RationalMagnitudeSq mag_sq;  // exact |<c1, c2>|^2
  double float_mag = 0.0;      // direct complex summation
};

/// <c1, c2> in exact and float arithmetic. Throws if the lengths differ or
/// |S|^2 is not rational.
CorrelationValue inner_product(const Codeword& c1, const Codeword& c2);

/// Pair counts keyed by exact |<ci, cj>|^2.
using Histogram = std::map<RationalMagnitudeSq, std::uint64_t>;

struct CorrelationReport {
  std::int64_t n = 0;
  std::int64_t k = 0;
  SweepMethod method = SweepMethod::BruteForce;
  SweepMode mode = SweepMode::Exact;

  RationalMagnitudeSq imax_sq;  // max |<ci, cj>|^2 over i != j
  double imax_float = 0.0;      // I_max itself (not squared)
  double welch_bound = 0.0;
  double ratio = 0.0;  // I_max / I_W

  Histogram histogram;
  std::array<Histogram, 3> by_kind;  // indexed by PairKind
  std::uint64_t pairs = 0;

  /// Both mode: max |float_mag^2 - mag_sq| over all pairs.
  double max_float_exact_gap = 0.0;
  /// Float mode: max distance of float_mag^2 from its snapped rational key.
  double max_snap_residual = 0.0;

  /// True when every internal consistency check held.
  bool consistent() const;
};

struct SweepOptions {
  SweepMode mode = SweepMode::Exact;
  unsigned threads = default_thread_count();
  std::int64_t tile = 128;
};

/// Exact sweeps are limited to N <= kExactSweepGuard.
inline constexpr std::int64_t kExactSweepGuard = 20'000;
/// Float sweeps materialize N*K complex doubles; limited to this many.
inline constexpr std::int64_t kFloatSweepGuard = 20'000'000;
/// Snap residual above which a float histogram key is untrustworthy.
inline constexpr double kSnapTolerance = 1e-6;
/// Allowed disagreement between float and exact |<ci, cj>|^2.
inline constexpr double kFloatExactTolerance = 1e-9;

/// Throws when a sweep of an (N, K) codebook in this mode exceeds its guard.
void check_sweep_guard(std::int64_t n, std::int64_t k, SweepMode mode);

/// All N(N-1)/2 pairs. Float and Both modes run a tiled Gram sweep over the
/// materialized codebook.
CorrelationReport imax_bruteforce(const Codebook& cb, const SweepOptions& opt = {});

/// One representative per difference class (da, db, du) plus closed-form
/// basis pairs. Produces the same histogram as imax_bruteforce.
CorrelationReport imax_symmetry(const Codebook& cb, const SweepOptions& opt = {});

/// Float sweep of an arbitrary set of rows (one codeword per row). Each
/// |<ci, cj>|^2 is snapped to a multiple of 1/denominator for the histogram.
template <typename Derived>
CorrelationReport imax_dense(const Eigen::MatrixBase<Derived>& rows, std::int64_t denominator);

struct WelchBound {
  RationalMagnitudeSq squared;  // (N - K) / ((N - 1) K)
  double value = 0.0;
};

/// I_W = sqrt((N - K) / ((N - 1) K)); needs N > K >= 1.
WelchBound welch_bound(const BigInt& n, const BigInt& k);

/// Specialised squared bounds: p / (p Q^2 + Q^2 - 1) and
/// p Q / ((p Q^2 + Q^2 - Q - 1)(Q - 1)).
RationalMagnitudeSq welch_sq_construction_one(const BigInt& p, const BigInt& q);
RationalMagnitudeSq welch_sq_construction_two(const BigInt& p, const BigInt& q);

/// Whether both specialised forms agree with welch_bound after substituting
/// the construction's (N, K).
bool welch_identities_hold(const BigInt& p, const BigInt& q);

/// Analytic I_max^2: 1/q^2 for construction one, 1/(q-1)^2 for two.
RationalMagnitudeSq analytic_imax_sq(ConstructionKind kind, std::int64_t q);
/// The construction-two value stated without proof, 1/(q(q-1)).
RationalMagnitudeSq stated_variant_imax_sq(std::int64_t q);

struct RatioReport {
  ConstructionKind kind = ConstructionKind::One;
  CodebookParams params{};
  RationalMagnitudeSq imax_sq;
  RationalMagnitudeSq welch_sq;
  RationalMagnitudeSq ratio_sq;  // (I_max / I_W)^2
  double imax = 0.0;
  double welch = 0.0;
  double imax_over_welch = 0.0;
  double welch_over_imax = 0.0;
  /// Construction two only: the same columns under I_max = 1/sqrt(q(q-1)).
  std::optional<double> variant_imax;
  std::optional<double> variant_welch_over_imax;
  /// ratio_sq matches the expanded closed form, checked in rational arithmetic.
  bool closed_form_holds = false;
  /// Limit of I_max / I_W as q grows with p_min fixed: sqrt(1 + 1/p).
  double limit_fixed_p = 0.0;
  /// Limit as p_min (and therefore q) grows: 1.
  double limit_joint = 1.0;
};

RatioReport ratio_report(ConstructionKind kind, std::int64_t q);

/// Every distinct pair sits at the Welch bound exactly. Throws when N <= K.
bool is_mwbe(const CorrelationReport& report);

/// Decimal with five significant figures, round-half-even.
std::string format_sig5(double v);

struct TableRow {
  std::int64_t p_min = 0;
  std::int64_t q = 0;
  std::int64_t n = 0;
  std::int64_t k = 0;
  double imax = 0.0;
  double welch = 0.0;
  double welch_over_imax = 0.0;
  std::optional<double> variant_imax;
  std::optional<double> variant_welch_over_imax;
  std::string provenance;  // "analytic" or "swept"
};

/// Rows (p_min, Q, N, K, I_max, I_W, I_W/I_max). With sweep set, rows whose
/// codebook fits the exact guard are confirmed by imax_symmetry.
std::vector<TableRow> table_rows(ConstructionKind kind, std::span<const std::int64_t> qs, bool sweep = false);

struct InvariantResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the full invariant suite on a codebook built by this library.
std::vector<InvariantResult> verify_codebook(const Codebook& cb, const SweepOptions& opt = {});

// ---------------------------------------------------------------------------

template <typename Derived>
CorrelationReport imax_dense(const Eigen::MatrixBase<Derived>& rows, std::int64_t denominator) {
  using Scalar = typename Derived::Scalar;
  if (rows.rows() < 2) throw std::invalid_argument("imax_dense: need at least two codewords");
  if (denominator < 1) throw std::invalid_argument("imax_dense: denominator must be positive");
  const auto gram = (rows * rows.adjoint()).eval();
  CorrelationReport rep;
  rep.n = rows.rows();
  rep.k = rows.cols();
  rep.method = SweepMethod::Dense;
  rep.mode = SweepMode::Float;
  std::map<std::int64_t, std::uint64_t> counts;
  const double den = static_cast<double>(denominator);
  for (Eigen::Index i = 0; i < gram.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < gram.cols(); ++j) {
      const double sq = static_cast<double>(std::norm(static_cast<Scalar>(gram(i, j))));
      const double scaled = sq * den;
      const double snapped = std::round(scaled);
      rep.max_snap_residual = std::max(rep.max_snap_residual, std::abs(scaled - snapped) / den);
      rep.imax_float = std::max(rep.imax_float, std::sqrt(sq));
      counts[static_cast<std::int64_t>(snapped)] += 1;
      ++rep.pairs;
    }
  }
  for (const auto& [num, c] : counts) rep.histogram[RationalMagnitudeSq(num, denominator)] += c;
  rep.imax_sq = rep.histogram.rbegin()->first;
  if (rep.n > rep.k) {
    rep.welch_bound = welch_bound(rep.n, rep.k).value;
    rep.ratio = rep.imax_float / rep.welch_bound;
  }
  return rep;
}

}  // namespace bentcodes
