#include "bentcodes/io.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bentcodes::io {

json load_json_argument(std::string_view arg) {
  if (!arg.empty() && arg.front() == '@') {
    const std::string path(arg.substr(1));
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return json::parse(in);
  }
  return json::parse(arg);
}

PermutationZQ permutation_from_json(const json& spec, Modulus q, std::optional<std::uint64_t> default_seed) {
  if (spec.is_array()) return PermutationZQ(q, spec.get<std::vector<std::int64_t>>());
  if (spec.is_string()) return permutation_from_string(spec.get<std::string>(), q, default_seed);
  if (spec.is_object()) {
    if (spec.contains("affine")) {
      const auto cd = spec.at("affine").get<std::vector<std::int64_t>>();
      if (cd.size() != 2) throw std::invalid_argument("affine permutation needs [c, d]");
      return PermutationZQ::affine(q, cd[0], cd[1]);
    }
    if (spec.contains("random")) return PermutationZQ::seeded(q, spec.at("random").get<std::uint64_t>());
  }
  throw std::invalid_argument("unrecognised permutation spec: " + spec.dump());
}

PermutationZQ permutation_from_string(std::string_view spec, Modulus q, std::optional<std::uint64_t> default_seed) {
  if (spec == "identity") return PermutationZQ::identity(q);
  if (spec == "random") {
    if (!default_seed) throw std::invalid_argument("random permutation requires an explicit seed");
    return PermutationZQ::seeded(q, *default_seed);
  }
  if (spec.starts_with("random:")) return PermutationZQ::seeded(q, std::stoull(std::string(spec.substr(7))));
  if (spec.starts_with("affine:")) {
    const std::string rest(spec.substr(7));
    const auto comma = rest.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("affine permutation spec is affine:c,d");
    return PermutationZQ::affine(q, std::stoll(rest.substr(0, comma)), std::stoll(rest.substr(comma + 1)));
  }
  if (!spec.empty() && (spec.front() == '[' || spec.front() == '@' || spec.front() == '{'))
    return permutation_from_json(load_json_argument(spec), q, default_seed);
  throw std::invalid_argument("unrecognised permutation spec: " + std::string(spec));
}

FunctionZQ unary_function_from_string(std::string_view spec, Modulus q) {
  if (spec == "zero") return FunctionZQ::constant(q, 1, 0);
  return FunctionZQ(q, 1, load_json_argument(spec).get<std::vector<std::int64_t>>());
}

FunctionZQ function_from_json(const json& table, Modulus q) {
  auto values = table.get<std::vector<std::int64_t>>();
  std::int64_t size = 1;
  int m = 0;
  while (size < static_cast<std::int64_t>(values.size())) {
    size *= q.value();
    ++m;
  }
  if (m == 0 || size != static_cast<std::int64_t>(values.size()))
    throw std::invalid_argument("function table length " + std::to_string(values.size()) + " is not a power of q");
  return FunctionZQ(q, m, std::move(values));
}

CodebookSpec parse_codebook_spec(const json& j) {
  CodebookSpec s;
  const int c = j.at("construction").get<int>();
  if (c != 1 && c != 2) throw std::invalid_argument("construction must be 1 or 2");
  s.construction = static_cast<ConstructionKind>(c);
  s.q = j.at("q").get<std::int64_t>();
  if (j.contains("pi")) s.pi = j.at("pi");
  if (j.contains("sigma")) s.sigma = j.at("sigma");
  if (j.contains("ell")) s.ell = j.at("ell").get<std::int64_t>();
  if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
  return s;
}

Codebook build_from_spec(const CodebookSpec& spec) {
  const Modulus q(spec.q);
  const auto pi = permutation_from_json(spec.pi, q, spec.seed);
  const auto sigma = permutation_from_json(spec.sigma, q, spec.seed ? std::optional(*spec.seed + 1) : std::nullopt);
  if (spec.construction == ConstructionKind::One) return build_construction_one(q, pi, sigma);
  return build_construction_two(q, pi, sigma, spec.ell);
}

json rational_json(const RationalMagnitudeSq& r) {
  return {{"numerator", r.numerator().str()}, {"denominator", r.denominator().str()}};
}

json codebook_metadata(const Codebook& cb) {
  json j{{"construction", static_cast<int>(cb.construction())},
         {"q", cb.q().value()},
         {"p_min", cb.p_min()},
         {"N", cb.size()},
         {"K", cb.length()},
         {"pi", cb.pi().images()},
         {"sigma", cb.sigma().images()},
         {"phase_scale_sq", rational_json(cb.phase_scale_sq())}};
  if (cb.ell()) j["ell"] = *cb.ell();
  return j;
}

json report_to_json(const CorrelationReport& rep) {
  auto hist = [](const Histogram& h) {
    json arr = json::array();
    for (const auto& [v, c] : h) arr.push_back({{"mag_sq", rational_json(v)}, {"count", c}});
    return arr;
  };
  json j{{"N", rep.n},
         {"K", rep.k},
         {"method", to_string(rep.method)},
         {"mode", to_string(rep.mode)},
         {"imax_sq", rational_json(rep.imax_sq)},
         {"imax", rep.imax_float},
         {"welch_bound", rep.welch_bound},
         {"ratio", rep.ratio},
         {"pairs", rep.pairs},
         {"histogram", hist(rep.histogram)},
         {"max_float_exact_gap", rep.max_float_exact_gap},
         {"max_snap_residual", rep.max_snap_residual},
         {"consistent", rep.consistent()}};
  json by_kind = json::object();
  for (std::size_t k = 0; k < 3; ++k) by_kind[to_string(static_cast<PairKind>(k))] = hist(rep.by_kind[k]);
  j["histogram_by_kind"] = by_kind;
  return j;
}

json bent_report_to_json(const FunctionZQ& f, const BentReport& rep) {
  json coeffs = json::array();
  for (std::size_t idx = 0; idx < rep.abs_sq.size(); ++idx) {
    coeffs.push_back({{"a", f.point(idx)},
                      {"abs_sq", rep.abs_sq[idx] ? json(rep.abs_sq[idx]->str()) : json(nullptr)},
                      {"magnitude", rep.magnitude[idx]}});
  }
  return {{"q", f.modulus().value()}, {"m", f.arity()}, {"bent", rep.bent}, {"coefficients", coeffs}};
}

json ratio_to_json(const RatioReport& r) {
  json j{{"construction", static_cast<int>(r.kind)},
         {"p_min", r.params.p_min},
         {"Q", r.params.q},
         {"N", r.params.n},
         {"K", r.params.k},
         {"imax_sq", rational_json(r.imax_sq)},
         {"welch_sq", rational_json(r.welch_sq)},
         {"ratio_sq", rational_json(r.ratio_sq)},
         {"imax", r.imax},
         {"welch_bound", r.welch},
         {"imax_over_welch", r.imax_over_welch},
         {"welch_over_imax", r.welch_over_imax},
         {"closed_form_holds", r.closed_form_holds},
         {"limit_joint", r.limit_joint},
         {"limit_fixed_p", r.limit_fixed_p}};
  if (r.variant_imax) {
    j["variant"] = {{"imax", *r.variant_imax},
                    {"welch_over_imax", *r.variant_welch_over_imax},
                    {"note", "I_max = 1/sqrt(Q(Q-1)) is not attained; the sweep maximum is 1/(Q-1)"}};
  }
  return j;
}

void write_codebook_csv(std::ostream& os, const Codebook& cb) {
  os << "# construction=" << static_cast<int>(cb.construction()) << " q=" << cb.q().value()
     << " p_min=" << cb.p_min() << " N=" << cb.size() << " K=" << cb.length();
  if (cb.ell()) os << " ell=" << *cb.ell();
  os << " phase_scale_sq=" << cb.phase_scale_sq().to_string() << "\n";
  os << "# pi=" << json(cb.pi().images()).dump() << " sigma=" << json(cb.sigma().images()).dump() << "\n";
  for (std::int64_t n = 0; n < cb.n_phase(); ++n) {
    const auto idx = cb.phase_index(n);
    os << "phase," << idx.a << ',' << idx.b << ',' << idx.u;
    for (std::int64_t c = 0; c < cb.length(); ++c) os << ',' << cb.exponents()(n, c);
    os << '\n';
  }
  for (std::int64_t k = 0; k < cb.length(); ++k) os << "basis," << k << '\n';
}

namespace {

template <typename T>
void put_le(std::ostream& os, T v) {
  for (std::size_t b = 0; b < sizeof(T); ++b) os.put(static_cast<char>((static_cast<std::uint64_t>(v) >> (8 * b)) & 0xff));
}

template <typename T>
T get_le(std::istream& is) {
  std::uint64_t v = 0;
  for (std::size_t b = 0; b < sizeof(T); ++b) {
    const int c = is.get();
    if (c == EOF) throw std::runtime_error("truncated codebook dump");
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * b);
  }
  return static_cast<T>(v);
}

constexpr char kMagic[4] = {'B', 'C', 'B', 'K'};

}  // namespace

void write_codebook_binary(std::ostream& os, const Codebook& cb) {
  os.write(kMagic, 4);
  put_le<std::uint32_t>(os, 1);
  put_le<std::uint32_t>(os, static_cast<std::uint32_t>(cb.construction()));
  put_le<std::uint32_t>(os, static_cast<std::uint32_t>(cb.q().value()));
  put_le<std::uint32_t>(os, static_cast<std::uint32_t>(cb.p_min()));
  put_le<std::int32_t>(os, cb.ell() ? static_cast<std::int32_t>(*cb.ell()) : -1);
  put_le<std::uint64_t>(os, static_cast<std::uint64_t>(cb.size()));
  put_le<std::uint64_t>(os, static_cast<std::uint64_t>(cb.length()));
  put_le<std::uint64_t>(os, static_cast<std::uint64_t>(cb.n_phase()));
  for (auto v : cb.pi().images()) put_le<std::uint32_t>(os, static_cast<std::uint32_t>(v));
  for (auto v : cb.sigma().images()) put_le<std::uint32_t>(os, static_cast<std::uint32_t>(v));
  const auto& ex = cb.exponents();
  for (Eigen::Index r = 0; r < ex.rows(); ++r) {
    for (Eigen::Index c = 0; c < ex.cols(); ++c) put_le<std::uint16_t>(os, static_cast<std::uint16_t>(ex(r, c)));
  }
}

BinaryDump read_codebook_binary(std::istream& is) {
  char magic[4];
  if (!is.read(magic, 4) || std::string_view(magic, 4) != std::string_view(kMagic, 4))
    throw std::runtime_error("not a codebook dump");
  if (get_le<std::uint32_t>(is) != 1) throw std::runtime_error("unsupported codebook dump version");
  BinaryDump d;
  d.construction = static_cast<ConstructionKind>(get_le<std::uint32_t>(is));
  d.q = get_le<std::uint32_t>(is);
  d.p_min = get_le<std::uint32_t>(is);
  const auto ell = get_le<std::int32_t>(is);
  if (ell >= 0) d.ell = ell;
  d.n = static_cast<std::int64_t>(get_le<std::uint64_t>(is));
  d.k = static_cast<std::int64_t>(get_le<std::uint64_t>(is));
  const auto n_phase = static_cast<std::int64_t>(get_le<std::uint64_t>(is));
  d.pi.resize(static_cast<std::size_t>(d.q));
  d.sigma.resize(static_cast<std::size_t>(d.q));
  for (auto& v : d.pi) v = get_le<std::uint32_t>(is);
  for (auto& v : d.sigma) v = get_le<std::uint32_t>(is);
  d.exponents.resize(n_phase, d.k);
  for (Eigen::Index r = 0; r < n_phase; ++r) {
    for (Eigen::Index c = 0; c < d.k; ++c) d.exponents(r, c) = get_le<std::uint16_t>(is);
  }
  return d;
}

std::string table_csv(const std::vector<TableRow>& rows, ImaxColumn column) {
  std::ostringstream os;
  os << "p_min,Q,N,K,I_max,I_W,ratio\n";
  for (const auto& r : rows) {
    const bool variant = column == ImaxColumn::Statement && r.variant_imax;
    os << r.p_min << ',' << r.q << ',' << r.n << ',' << r.k << ','
       << format_sig5(variant ? *r.variant_imax : r.imax) << ',' << format_sig5(r.welch) << ','
       << format_sig5(variant ? *r.variant_welch_over_imax : r.welch_over_imax) << '\n';
  }
  return os.str();
}

json table_json(ConstructionKind kind, const std::vector<TableRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json j{{"p_min", r.p_min},
           {"Q", r.q},
           {"N", r.n},
           {"K", r.k},
           {"I_max", format_sig5(r.imax)},
           {"I_W", format_sig5(r.welch)},
           {"ratio", format_sig5(r.welch_over_imax)},
           {"provenance", r.provenance}};
    if (r.variant_imax) {
      j["variant_I_max"] = format_sig5(*r.variant_imax);
      j["variant_ratio"] = format_sig5(*r.variant_welch_over_imax);
      j["variant_flag"] = "1/sqrt(Q(Q-1)) variant; not the attained maximum";
    }
    arr.push_back(std::move(j));
  }
  return {{"construction", static_cast<int>(kind)}, {"rows", arr}};
}

std::string table_text(ConstructionKind kind, const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "p_min\tQ\tN\tK\tI_max\tI_W\tI_W/I_max";
  if (kind == ConstructionKind::Two) os << "\tI_max*\tI_W/I_max*";
  os << "\tprovenance\n";
  for (const auto& r : rows) {
    os << r.p_min << '\t' << r.q << '\t' << r.n << '\t' << r.k << '\t' << format_sig5(r.imax) << '\t'
       << format_sig5(r.welch) << '\t' << format_sig5(r.welch_over_imax);
    if (r.variant_imax) os << '\t' << format_sig5(*r.variant_imax) << '\t' << format_sig5(*r.variant_welch_over_imax);
    os << '\t' << r.provenance << '\n';
  }
  if (kind == ConstructionKind::Two) os << "* variant column: I_max taken as 1/sqrt(Q(Q-1)), below the attained 1/(Q-1)\n";
  return os.str();
}

}  // namespace bentcodes::io
