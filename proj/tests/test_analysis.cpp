#include <doctest.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <random>
#include <vector>

#include "bentcodes/analysis.hpp"

using namespace bentcodes;

namespace {

Codebook one(std::int64_t q) {
  const Modulus m(q);
  return build_construction_one(m, PermutationZQ::identity(m), PermutationZQ::identity(m));
}

Codebook two(std::int64_t q, std::int64_t ell) {
  const Modulus m(q);
  return build_construction_two(m, PermutationZQ::identity(m), PermutationZQ::identity(m), ell);
}

// Naive double loop over dense complex codewords built from the formula,
// without materialize() or the tiled sweep.
double naive_imax(const Codebook& cb) {
  const std::int64_t q = cb.q().value();
  std::vector<std::vector<std::complex<double>>> words;
  for (std::int64_t n = 0; n < cb.size(); ++n) {
    const auto w = cb.codeword(n);
    std::vector<std::complex<double>> v(static_cast<std::size_t>(w.length));
    for (std::int64_t k = 0; k < w.length; ++k) {
      if (w.kind == CodewordKind::StandardBasis) {
        v[static_cast<std::size_t>(k)] = k == w.basis_index ? 1.0 : 0.0;
      } else {
        v[static_cast<std::size_t>(k)] =
            std::polar(1.0 / std::sqrt(static_cast<double>(w.length)),
                       2 * std::numbers::pi * static_cast<double>(w.exponents[static_cast<std::size_t>(k)]) / q);
      }
    }
    words.push_back(std::move(v));
  }
  double best = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      std::complex<double> s = 0;
      for (std::size_t k = 0; k < words[i].size(); ++k) s += words[i][k] * std::conj(words[j][k]);
      best = std::max(best, std::abs(s));
    }
  }
  return best;
}

}  // namespace

TEST_CASE("inner products") {
  const auto cb = one(4);
  const auto w = cb.codeword(5);
  const auto self = inner_product(w, w);
  CHECK(self.mag_sq == RationalMagnitudeSq(1, 1));
  CHECK(self.float_mag == doctest::Approx(1.0));

  // same a and u, different b: orthogonal
  const auto v1 = cb.codeword(cb.phase_word({1, 0, 2}));
  const auto v2 = cb.codeword(cb.phase_word({1, 3, 2}));
  CHECK(inner_product(v1, v2).mag_sq == RationalMagnitudeSq{});
  // basis vs phase: 1/Q^2
  CHECK(inner_product(cb.codeword(cb.n_phase() + 7), v1).mag_sq == RationalMagnitudeSq(1, 16));
  // different a: 1/Q^2
  const auto v3 = cb.codeword(cb.phase_word({0, 1, 3}));
  CHECK(inner_product(v1, v3).mag_sq == RationalMagnitudeSq(1, 16));
  CHECK(inner_product(v1, v3).float_mag == doctest::Approx(0.25));

  CHECK_THROWS_AS(inner_product(w, one(3).codeword(0)), std::invalid_argument);
}

TEST_CASE("brute force q=6 matches naive float oracle") {
  const auto cb = one(6);
  const double oracle = naive_imax(cb);
  CHECK(oracle == doctest::Approx(1.0 / 6).epsilon(1e-12));
  for (auto mode : {SweepMode::Exact, SweepMode::Float, SweepMode::Both}) {
    const auto rep = imax_bruteforce(cb, {.mode = mode, .threads = 3, .tile = 17});
    CHECK(rep.imax_sq == RationalMagnitudeSq(1, 36));
    CHECK(rep.imax_float == doctest::Approx(oracle).epsilon(1e-12));
    CHECK(rep.pairs == 108u * 107u / 2);
    CHECK(rep.consistent());
    for (const auto& [v, c] : rep.histogram) CHECK((v == RationalMagnitudeSq{} || v == RationalMagnitudeSq(1, 36)));
  }
}

TEST_CASE("brute force is independent of tiling and thread count") {
  const auto cb = two(5, 3);
  const auto ref = imax_bruteforce(cb, {.mode = SweepMode::Both, .threads = 1, .tile = 1000});
  for (unsigned threads : {1u, 2u, 5u}) {
    for (std::int64_t tile : {1, 7, 64}) {
      const auto rep = imax_bruteforce(cb, {.mode = SweepMode::Both, .threads = threads, .tile = tile});
      CHECK(rep.histogram == ref.histogram);
      CHECK(rep.by_kind == ref.by_kind);
      CHECK(rep.imax_sq == ref.imax_sq);
    }
  }
}

TEST_CASE("construction two at q=3 exceeds the stated variant") {
  const auto cb = two(3, 0);
  CHECK(naive_imax(cb) == doctest::Approx(0.5));
  const auto rep = imax_bruteforce(cb, {.mode = SweepMode::Both});
  CHECK(rep.imax_sq == RationalMagnitudeSq(1, 4));
  CHECK(rep.imax_sq > stated_variant_imax_sq(3));
  CHECK(rep.pairs == 33u * 32u / 2);
}

TEST_CASE("symmetry path reproduces brute force") {
  for (std::int64_t q = 2; q <= 10; ++q) {
    const Modulus m(q);
    const auto pi = PermutationZQ::seeded(m, 31 * static_cast<std::uint64_t>(q));
    const auto sigma = PermutationZQ::seeded(m, 77 * static_cast<std::uint64_t>(q));
    std::vector<Codebook> books{build_construction_one(m, pi, sigma)};
    if (q >= 3) books.push_back(build_construction_two(m, pi, sigma, q - 1));
    for (const auto& cb : books) {
      const auto brute = imax_bruteforce(cb, {.mode = SweepMode::Exact});
      const auto sym = imax_symmetry(cb, {.mode = SweepMode::Exact});
      CHECK(sym.histogram == brute.histogram);
      CHECK(sym.by_kind == brute.by_kind);
      CHECK(sym.imax_sq == brute.imax_sq);
      const auto symf = imax_symmetry(cb, {.mode = SweepMode::Float});
      CHECK(symf.histogram == brute.histogram);
      CHECK(symf.imax_float == doctest::Approx(brute.imax_float).epsilon(1e-12));
    }
  }
}

TEST_CASE("difference classes in closed form") {
  const auto cb = one(6);
  const std::int64_t origin = cb.phase_word({0, 0, 0});
  // da = 0, db != 0: zero
  CHECK(inner_product(cb.codeword(cb.phase_word({0, 2, 5})), cb.codeword(origin)).mag_sq == RationalMagnitudeSq{});
  // da != 0: magnitude 1/Q via the single root of the congruence
  CHECK(inner_product(cb.codeword(cb.phase_word({1, 4, 1})), cb.codeword(origin)).mag_sq == RationalMagnitudeSq(1, 36));
}

TEST_CASE("value sets over random permutations") {
  std::mt19937_64 rng(12);
  for (std::int64_t q = 3; q <= 12; ++q) {
    const Modulus m(q);
    for (int t = 0; t < 20; ++t) {
      const auto pi = PermutationZQ::seeded(m, rng());
      const auto sigma = PermutationZQ::seeded(m, rng());
      const auto r1 = imax_symmetry(build_construction_one(m, pi, sigma));
      for (const auto& [v, c] : r1.histogram) CHECK((v == RationalMagnitudeSq{} || v == RationalMagnitudeSq(1, q * q)));
      const auto cb2 = build_construction_two(m, pi, sigma, static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(q)));
      const auto r2 = imax_symmetry(cb2);
      for (const auto& [v, c] : r2.by_kind[0])
        CHECK((v == RationalMagnitudeSq{} || v == RationalMagnitudeSq(1, (q - 1) * (q - 1))));
      CHECK(r2.by_kind[1].size() == 1);
      CHECK(r2.by_kind[1].begin()->first == RationalMagnitudeSq(1, q * (q - 1)));
      CHECK(r2.imax_sq == analytic_imax_sq(ConstructionKind::Two, q));
    }
  }
}

TEST_CASE("I_max does not depend on ell") {
  for (std::int64_t q = 3; q <= 8; ++q) {
    const Modulus m(q);
    const auto pi = PermutationZQ::seeded(m, 5), sigma = PermutationZQ::affine(m, 1, 3);
    for (std::int64_t ell = 0; ell < q; ++ell) {
      CHECK(imax_bruteforce(build_construction_two(m, pi, sigma, ell)).imax_sq ==
            RationalMagnitudeSq(1, (q - 1) * (q - 1)));
    }
  }
}

TEST_CASE("exact sweep guard") {
  // construction one at q = 82 has N = 20172
  CHECK_THROWS_AS(check_sweep_guard(20172, 6724, SweepMode::Exact), std::invalid_argument);
  CHECK_NOTHROW(check_sweep_guard(20000, 100, SweepMode::Exact));
  CHECK_THROWS_AS(check_sweep_guard(20000, 1001, SweepMode::Float), std::invalid_argument);
  CHECK_THROWS_AS(check_sweep_guard(1, 1, SweepMode::Float), std::invalid_argument);
}

TEST_CASE("welch bound") {
  CHECK(format_sig5(welch_bound(7350, 1225).value) == "0.026084");
  CHECK(std::abs(welch_bound(7350, 1225).value - 0.02608) < 5e-6);
  CHECK(std::abs(welch_bound(47355, 5852).value - 0.01224) < 5e-6);
  CHECK(welch_bound(5, 4).squared == RationalMagnitudeSq(1, 16));
  CHECK(welch_bound(5, 4).value == doctest::Approx(0.25));
  CHECK_THROWS_AS(welch_bound(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(welch_bound(4, 0), std::invalid_argument);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const BigInt p = 2 + rng() % 1000, q = 3 + rng() % 100000;
    CHECK(welch_identities_hold(p, q));
  }
}

TEST_CASE("ratio report") {
  const auto r35 = ratio_report(ConstructionKind::One, 35);
  CHECK(std::abs(r35.welch_over_imax - 0.91293) < 5e-6);
  CHECK(r35.closed_form_holds);
  CHECK(std::abs(ratio_report(ConstructionKind::One, 221).imax_over_welch - 1 / 0.96362) < 1e-4);
  const auto r77 = ratio_report(ConstructionKind::Two, 77);
  CHECK(r77.closed_form_holds);
  REQUIRE(r77.variant_imax.has_value());
  CHECK(std::abs(*r77.variant_imax - 0.013072) < 5e-7);
  CHECK(std::abs(*r77.variant_welch_over_imax - 0.93618) < 5e-6);
  CHECK(r77.imax == doctest::Approx(1.0 / 76));
  CHECK(r77.limit_fixed_p == doctest::Approx(std::sqrt(1 + 1.0 / 7)));
}

TEST_CASE("MWBE check") {
  const auto rep6 = imax_bruteforce(one(6));
  CHECK_FALSE(is_mwbe(rep6));

  // (3, 2) equiangular frame: three unit vectors 120 degrees apart
  Eigen::Matrix<std::complex<double>, 3, 2> etf;
  for (int r = 0; r < 3; ++r) {
    const double t = 2 * std::numbers::pi * r / 3;
    etf(r, 0) = std::cos(t);
    etf(r, 1) = std::sin(t);
  }
  const auto rep = imax_dense(etf, 4);
  CHECK(rep.imax_sq == RationalMagnitudeSq(1, 4));
  CHECK(rep.max_snap_residual < 1e-12);
  CHECK(is_mwbe(rep));

  const Eigen::Matrix<std::complex<double>, 2, 2> basis = Eigen::Matrix<std::complex<double>, 2, 2>::Identity();
  CHECK_THROWS_AS(is_mwbe(imax_dense(basis, 1)), std::invalid_argument);
}

TEST_CASE("formatting") {
  CHECK(format_sig5(0.0020283975) == "0.0020284");
  CHECK(format_sig5(0.5) == "0.50000");
  CHECK(format_sig5(0.913) == "0.91300");
  CHECK(format_sig5(123456.0) == "123460");
  CHECK(format_sig5(1.5) == "1.5000");
  // exact binary ties round to even
  CHECK(format_sig5(0.125) == "0.12500");
  CHECK(format_sig5(2.03125) == "2.0312");
  CHECK(format_sig5(2.09375) == "2.0938");
}

TEST_CASE("table rows") {
  const std::vector<std::int64_t> qs{2};
  const auto rows = table_rows(ConstructionKind::One, qs, true);
  REQUIRE(rows.size() == 1);
  const auto& r = rows[0];
  CHECK(r.p_min == 2);
  CHECK(r.n == 12);
  CHECK(r.k == 4);
  CHECK(format_sig5(r.imax) == "0.50000");
  CHECK(format_sig5(r.welch) == "0.42640");
  CHECK(format_sig5(r.welch_over_imax) == "0.85280");
  CHECK(r.provenance == "swept");
  // cross-check against a brute-force sweep at q = 2
  CHECK(imax_bruteforce(one(2)).imax_float == doctest::Approx(r.imax));

  const std::vector<std::int64_t> big{493};
  const auto r493 = table_rows(ConstructionKind::One, big, true)[0];
  CHECK(r493.provenance == "analytic");
  CHECK(format_sig5(r493.imax) == "0.0020284");
  CHECK(format_sig5(r493.welch) == "0.0019712");
  CHECK(format_sig5(r493.welch_over_imax) == "0.97183");

  const std::vector<std::int64_t> q437{437};
  const auto r437 = table_rows(ConstructionKind::Two, q437)[0];
  CHECK(r437.n == 3818943);
  CHECK(r437.k == 190532);
  CHECK(format_sig5(r437.welch) == "0.0022331");
  CHECK(format_sig5(r437.imax) != "0.0022906");
  CHECK(std::abs(*r437.variant_imax - 0.0022906) < 5e-7);
}

TEST_CASE("verify suite passes on library codebooks") {
  for (auto mode : {SweepMode::Exact, SweepMode::Both}) {
    for (const auto& cb : {one(4), two(6, 2)}) {
      for (const auto& inv : verify_codebook(cb, {.mode = mode})) {
        INFO(inv.name, ": ", inv.detail);
        CHECK(inv.passed);
      }
    }
  }
}
