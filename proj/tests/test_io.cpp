#include <doctest.h>

#include <sstream>
#include <string>

#include "bentcodes/io.hpp"

using namespace bentcodes;
using io::json;

TEST_CASE("permutation specs") {
  const Modulus q(7);
  CHECK(io::permutation_from_string("identity", q, std::nullopt) == PermutationZQ::identity(q));
  CHECK(io::permutation_from_string("affine:3,1", q, std::nullopt) == PermutationZQ::affine(q, 3, 1));
  CHECK(io::permutation_from_string("random:9", q, std::nullopt) == PermutationZQ::seeded(q, 9));
  CHECK(io::permutation_from_string("random", q, 9) == PermutationZQ::seeded(q, 9));
  CHECK_THROWS_AS(io::permutation_from_string("random", q, std::nullopt), std::invalid_argument);
  CHECK(io::permutation_from_string("[6,5,4,3,2,1,0]", q, std::nullopt).images() ==
        std::vector<std::int64_t>{6, 5, 4, 3, 2, 1, 0});
  CHECK(io::permutation_from_json(json{{"affine", {2, 0}}}, q, std::nullopt) == PermutationZQ::affine(q, 2, 0));
  CHECK(io::permutation_from_json(json{{"random", 4}}, q, std::nullopt) == PermutationZQ::seeded(q, 4));
  CHECK_THROWS_AS(io::permutation_from_string("[0,0,1,2,3,4,5]", q, std::nullopt), std::invalid_argument);
  CHECK_THROWS_AS(io::permutation_from_string("shuffle", q, std::nullopt), std::invalid_argument);
}

TEST_CASE("codebook spec files") {
  const auto spec = io::parse_codebook_spec(json::parse(R"({"construction": 2, "q": 5, "pi": "random", "sigma": "random", "ell": 3, "seed": 10})"));
  const auto cb = io::build_from_spec(spec);
  CHECK(cb.construction() == ConstructionKind::Two);
  CHECK(cb.ell() == 3);
  CHECK(cb.pi() == PermutationZQ::seeded(Modulus(5), 10));
  CHECK(cb.sigma() == PermutationZQ::seeded(Modulus(5), 11));
  CHECK_THROWS(io::parse_codebook_spec(json::parse(R"({"construction": 3, "q": 5})")));
  CHECK_THROWS_AS(io::build_from_spec(io::parse_codebook_spec(json::parse(R"({"construction": 2, "q": 2})"))),
                  std::invalid_argument);
}

TEST_CASE("binary dump round trip") {
  for (std::int64_t q = 3; q <= 7; ++q) {
    const Modulus m(q);
    const auto cb = build_construction_two(m, PermutationZQ::seeded(m, 1), PermutationZQ::seeded(m, 2), q - 2);
    std::stringstream ss;
    io::write_codebook_binary(ss, cb);
    const auto d = io::read_codebook_binary(ss);
    CHECK(d.construction == ConstructionKind::Two);
    CHECK(d.q == q);
    CHECK(d.ell == q - 2);
    CHECK(d.n == cb.size());
    CHECK(d.k == cb.length());
    CHECK(d.pi == cb.pi().images());
    CHECK(d.exponents == cb.exponents());
  }
  std::stringstream bad("XXXX");
  CHECK_THROWS(io::read_codebook_binary(bad));
}

TEST_CASE("csv dump layout") {
  const Modulus m(2);
  const auto cb = build_construction_one(m, PermutationZQ::identity(m), PermutationZQ::identity(m));
  std::ostringstream os;
  io::write_codebook_csv(os, cb);
  const std::string s = os.str();
  CHECK(s.starts_with("# construction=1 q=2 p_min=2 N=12 K=4 phase_scale_sq=1/4\n"));
  CHECK(s.find("phase,0,0,0,0,0,0,0\n") != std::string::npos);
  CHECK(s.find("phase,1,0,1,0,0,1,0\n") != std::string::npos);  // j*pi(i) + sigma(i), i-major
  CHECK(s.find("basis,3\n") != std::string::npos);
}

TEST_CASE("reports and tables") {
  const Modulus m(3);
  const auto cb = build_construction_one(m, PermutationZQ::identity(m), PermutationZQ::identity(m));
  const auto j = io::report_to_json(imax_bruteforce(cb));
  CHECK(j["imax_sq"]["numerator"] == "1");
  CHECK(j["imax_sq"]["denominator"] == "9");
  CHECK(j["consistent"] == true);
  std::uint64_t total = 0;
  for (const auto& h : j["histogram"]) total += h["count"].get<std::uint64_t>();
  CHECK(total == 36u * 35u / 2);

  const std::vector<std::int64_t> qs{77};
  const auto rows = table_rows(ConstructionKind::Two, qs);
  CHECK(io::table_csv(rows) == "p_min,Q,N,K,I_max,I_W,ratio\n7,77,47355,5852,0.013158,0.012238,0.93009\n");
  CHECK(io::table_csv(rows, io::ImaxColumn::Statement) ==
        "p_min,Q,N,K,I_max,I_W,ratio\n7,77,47355,5852,0.013072,0.012238,0.93618\n");
  CHECK(io::table_json(ConstructionKind::Two, rows)["rows"][0]["variant_I_max"] == "0.013072");
}

TEST_CASE("function tables from json") {
  const auto f = io::function_from_json(json::parse("[0,0,0,1]"), Modulus(2));
  CHECK(f.arity() == 2);
  CHECK(is_generalized_bent(f).bent);
  CHECK_THROWS_AS(io::function_from_json(json::parse("[0,0,0]"), Modulus(2)), std::invalid_argument);
}
