#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bentcodes/analysis.hpp"
#include "bentcodes/construction.hpp"
#include "bentcodes/gbf.hpp"

namespace bentcodes::io {

using json = nlohmann::json;

/// Permutation from a JSON spec: an image array, "identity",
/// {"affine": [c, d]}, or {"random": seed}. A bare "random" takes
/// default_seed, which must then be present.
PermutationZQ permutation_from_json(const json& spec, Modulus q, std::optional<std::uint64_t> default_seed);

/// Same, from a command-line string: "identity", "affine:c,d",
/// "random:seed", "random", an inline JSON array, or "@path" to a JSON file.
PermutationZQ permutation_from_string(std::string_view spec, Modulus q, std::optional<std::uint64_t> default_seed);

/// Unary function table from "zero", an inline JSON array, or "@path".
FunctionZQ unary_function_from_string(std::string_view spec, Modulus q);

/// Function Z_q^m -> Z_q from a JSON array of q^m values; m is inferred.
FunctionZQ function_from_json(const json& table, Modulus q);

json load_json_argument(std::string_view arg);

struct CodebookSpec {
  ConstructionKind construction = ConstructionKind::One;
  std::int64_t q = 2;
  json pi = "identity";
  json sigma = "identity";
  std::int64_t ell = 0;
  std::optional<std::uint64_t> seed;
};

/// {construction: 1|2, q, pi?, sigma?, ell?, seed?}. A random pi uses seed,
/// a random sigma uses seed + 1.
CodebookSpec parse_codebook_spec(const json& j);
Codebook build_from_spec(const CodebookSpec& spec);

json codebook_metadata(const Codebook& cb);
json rational_json(const RationalMagnitudeSq& r);
json report_to_json(const CorrelationReport& rep);
json bent_report_to_json(const FunctionZQ& f, const BentReport& rep);
json ratio_to_json(const RatioReport& r);

/// CSV dump: '#' metadata lines, then "phase,a,b,u,e_0..e_{K-1}" rows and
/// "basis,index" rows.
void write_codebook_csv(std::ostream& os, const Codebook& cb);

/// Little-endian binary dump; layout documented in the README.
void write_codebook_binary(std::ostream& os, const Codebook& cb);

struct BinaryDump {
  ConstructionKind construction = ConstructionKind::One;
  std::int64_t q = 0;
  std::int64_t p_min = 0;
  std::optional<std::int64_t> ell;
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::vector<std::int64_t> pi;
  std::vector<std::int64_t> sigma;
  ExponentMatrix exponents;
};
BinaryDump read_codebook_binary(std::istream& is);

enum class ImaxColumn { Proof, Statement };

/// Columns exactly p_min,Q,N,K,I_max,I_W,ratio. For construction two the
/// Statement choice fills I_max and ratio from 1/sqrt(Q(Q-1)).
std::string table_csv(const std::vector<TableRow>& rows, ImaxColumn column = ImaxColumn::Proof);
json table_json(ConstructionKind kind, const std::vector<TableRow>& rows);
std::string table_text(ConstructionKind kind, const std::vector<TableRow>& rows);

}  // namespace bentcodes::io
