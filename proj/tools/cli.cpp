#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <vector>

#include "cyclecone/classes.hpp"
#include "cyclecone/cones.hpp"
#include "cyclecone/lattice.hpp"
#include "cyclecone/numtheory.hpp"

namespace cyclecone::cli {

using nlohmann::json;

namespace {

std::string display_float(const ExactRational& q) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12e", to_double(q));
  return buffer;
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

json matrix_json(const IntMatrix& m) { return m.to_rows(); }

json half_integral_json(const HalfIntegralMatrix& t) {
  return json{{"doubled", true}, {"matrix", matrix_json(t.doubled())}};
}

std::vector<std::vector<std::int64_t>> parse_integer_rows(const std::string& text, const char* what) {
  try {
    return json::parse(text).get<std::vector<std::vector<std::int64_t>>>();
  } catch (const json::exception& e) {
    throw UsageError(std::string("--") + what + " must be a JSON array of integer rows: " + e.what());
  }
}

}  // namespace

ResolvedWeight resolve_weight(const RunConfig& config) {
  if (config.n.has_value() == config.weight.has_value()) {
    throw UsageError("exactly one of --n or --weight is required");
  }
  ResolvedWeight out;
  if (config.n) {
    try {
      out.k = weight_from_signature(*config.n);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    out.n = config.n;
    out.physical = *config.n >= 10 && (*config.n - 2) % 8 == 0;
  } else {
    out.k = *config.weight;
    if (out.k < 4 || out.k % 2 != 0) {
      throw UsageError("--weight must be even and >= 4, got " + std::to_string(out.k));
    }
    out.physical = false;
  }
  return out;
}

std::size_t resolve_precision(const RunConfig& config, int k) {
  const auto needed = std::max<std::size_t>({config.max_m + 1, static_cast<std::size_t>(dim_mk(k)), 1});
  if (!config.precision) return needed;
  if (*config.precision < needed) {
    throw UsageError("--precision " + std::to_string(*config.precision) + " is below the required " +
                     std::to_string(needed) + " (max-m + 1 and dim M_k)");
  }
  return *config.precision;
}

std::filesystem::path basis_cache_path(const std::filesystem::path& dir, int k, std::size_t precision) {
  return dir / ("miller_k" + std::to_string(k) + "_N" + std::to_string(precision) + ".txt");
}

MillerBasis load_or_build_basis(int k, std::size_t precision, const std::optional<std::filesystem::path>& cache_dir,
                                std::ostream& err) {
  if (!cache_dir) return miller_basis(k, precision);
  const auto path = basis_cache_path(*cache_dir, k, precision);

  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    try {
      MillerBasis cached = read_miller_basis(in);
      if (cached.weight == k && cached.precision == precision && cached.has_pivot_property()) return cached;
      err << "warning: cache file " << path.string() << " does not match the request; recomputing\n";
    } catch (const std::runtime_error& e) {
      err << "warning: corrupt cache file " << path.string() << " (" << e.what() << "); recomputing\n";
    }
  }

  MillerBasis basis = miller_basis(k, precision);
  std::error_code ec;
  std::filesystem::create_directories(*cache_dir, ec);
  std::ofstream out(path, std::ios::trunc);
  if (out) write_miller_basis(out, basis);
  if (!out) err << "warning: could not write cache file " << path.string() << '\n';
  return basis;
}

int cmd_identities(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const ResolvedWeight w = resolve_weight(config);
  const int n = w.n.value_or(2 * (w.k - 1));
  const QSeries e = eisenstein(w.k, config.max_m + 1);

  std::vector<IdentityReport> emitted;
  std::optional<std::uint64_t> first_failure;
  for (std::uint64_t m = 1; m <= config.max_m; ++m) {
    IdentityReport full = eisenstein_coefficient_identity(m, n, e);
    IdentityReport prim = primitive_eisenstein_identity(m, n, e);
    const bool ok = full.equal && prim.equal && prim.lhs != 0;
    if (!ok && !first_failure) first_failure = m;
    emitted.push_back(config.primitive ? std::move(prim) : std::move(full));
  }

  if (config.format == OutputFormat::csv) {
    out << "m,n,lhs,rhs,equal\n";
    for (const auto& r : emitted) out << to_record(r) << '\n';
  } else {
    json records = json::array();
    for (const auto& r : emitted) {
      records.push_back({{"m", r.m}, {"n", r.n}, {"lhs", to_string(r.lhs)}, {"rhs", to_string(r.rhs)},
                         {"equal", r.equal}});
    }
    emit_json(out, json{{"identity", config.primitive ? "primitive" : "full"},
                        {"n", n},
                        {"physical", w.physical},
                        {"records", records},
                        {"weight", w.k}});
  }
  if (!w.physical) err << "note: weight " << w.k << " is non-physical (no even unimodular lattice)\n";
  if (first_failure) {
    err << "identity check failed at m = " << *first_failure << '\n';
    return kExitCheckFailure;
  }
  return kExitSuccess;
}

int cmd_converge(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const ResolvedWeight w = resolve_weight(config);
  const std::size_t precision = resolve_precision(config, w.k);
  const MillerBasis basis = load_or_build_basis(w.k, precision, config.cache_dir, err);

  std::vector<std::uint64_t> indices(config.max_m);
  std::iota(indices.begin(), indices.end(), 1);
  const auto rows = convergence_scan(basis, indices, config.primitive);

  if (config.format == OutputFormat::csv) {
    out << "m,distance_num,distance_den,distance_float\n";
    for (const auto& row : rows) {
      out << row.m << ',' << row.distance.get_num().get_str() << ',' << row.distance.get_den().get_str() << ','
          << display_float(row.distance) << '\n';
    }
  } else {
    json table = json::array();
    for (const auto& row : rows) {
      table.push_back({{"m", row.m}, {"distance", to_string(row.distance)},
                       {"distance_float", display_float(row.distance)}});
    }
    emit_json(out, json{{"classes", config.primitive ? "primitive" : "full"},
                        {"n", w.n ? json(*w.n) : json(nullptr)},
                        {"physical", w.physical},
                        {"rows", table},
                        {"weight", w.k}});
  }
  if (!w.physical) err << "note: weight " << w.k << " is non-physical (no even unimodular lattice)\n";
  return kExitSuccess;
}

namespace {

json ray_list_json(const std::vector<Ray>& rays) {
  json out = json::array();
  for (const auto& r : rays) {
    json coords = json::array();
    for (const auto& c : r.canonical().coordinates) coords.push_back(to_string(c));
    out.push_back(coords);
  }
  return out;
}

}  // namespace

int cmd_cone(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const ResolvedWeight w = resolve_weight(config);
  const std::size_t precision = resolve_precision(config, w.k);
  const MillerBasis basis = load_or_build_basis(w.k, precision, config.cache_dir, err);

  const std::uint64_t half_m = config.max_m / 2;
  const Cone cone = accumulation_cone_model(basis, config.max_m);
  const Cone half_cone = accumulation_cone_model(basis, half_m);

  const std::size_t dim = span_dimension(cone);
  const int expected = dim_mk(w.k);
  const bool pointed = is_pointed(cone);

  json report{{"dim", dim},
              {"expected_dim", expected},
              {"generators", cone.generators().size()},
              {"half_m", half_m},
              {"max_m", config.max_m},
              {"n", w.n ? json(*w.n) : json(nullptr)},
              {"physical", w.physical},
              {"pointed", pointed},
              {"weight", w.k}};

  if (pointed) {
    const auto extremal = extremal_generators(cone);
    const auto rays = extremal_rays(cone);
    const auto half_rays = extremal_rays(half_cone);
    report["extremal"] = extremal;
    report["extremal_rays"] = ray_list_json(rays);
    report["extremal_half"] = extremal_generators(half_cone);
    report["extremal_stable"] = rays == half_rays;
  } else {
    report["extremal"] = nullptr;
    report["extremal_rays"] = nullptr;
    report["extremal_half"] = nullptr;
    report["extremal_stable"] = nullptr;
  }
  emit_json(out, report);

  if (!w.physical) err << "note: weight " << w.k << " is non-physical (no even unimodular lattice)\n";
  const bool dim_ok = config.max_m < static_cast<std::uint64_t>(expected) || dim == static_cast<std::size_t>(expected);
  if (!pointed || !dim_ok) {
    err << "cone check failed:" << (pointed ? "" : " not pointed") << (dim_ok ? "" : " span dimension mismatch")
        << '\n';
    return kExitCheckFailure;
  }
  return kExitSuccess;
}

int cmd_lattice(const LatticeArgs& args, std::ostream& out, std::ostream& err) {
  if (args.subcommand == "reduce") {
    const auto rows = parse_integer_rows(args.matrix, "matrix");
    HalfIntegralMatrix t{IntMatrix(2, 2)};
    try {
      t = HalfIntegralMatrix(IntMatrix::from_rows(rows));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--matrix: ") + e.what());
    }
    const Reduction r = [&] {
      try {
        return gauss_reduce(t);
      } catch (const std::exception& e) {
        throw UsageError(std::string("reduce: ") + e.what());
      }
    }();
    emit_json(out, json{{"determinant", to_string(t.determinant())},
                        {"input", half_integral_json(t)},
                        {"reduced", half_integral_json(r.reduced)},
                        {"u", matrix_json(r.u)}});
    return kExitSuccess;
  }

  EvenLattice lattice = [&] {
    try {
      return build_even_unimodular(args.n);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();

  if (args.subcommand == "build") {
    emit_json(out, json{{"gram", matrix_json(lattice.gram())},
                        {"rank", lattice.rank()},
                        {"signature", {lattice.signature().first, lattice.signature().second}}});
    return kExitSuccess;
  }

  if (args.subcommand == "moment") {
    std::vector<LatticeVector> tuple;
    for (auto& row : parse_integer_rows(args.vectors, "vectors")) tuple.push_back({std::move(row)});
    if (tuple.empty()) throw UsageError("--vectors must contain at least one vector");
    for (const auto& v : tuple) {
      if (v.rank() != lattice.rank()) {
        throw UsageError("vector length " + std::to_string(v.rank()) + " does not match lattice rank " +
                         std::to_string(lattice.rank()));
      }
    }
    const HalfIntegralMatrix t = moment_matrix(lattice, tuple);
    json report = half_integral_json(t);
    report["positive_definite"] = is_positive_definite(t);
    emit_json(out, report);
    return kExitSuccess;
  }

  if (args.subcommand == "family") {
    if (args.m < 1 || args.j_max < 2) throw UsageError("family needs --m >= 1 and --jmax >= 2");
    const auto family = common_component_family(lattice, args.m, args.j_max);
    json members = json::array();
    for (const auto& member : family.members) {
      members.push_back({{"determinant", to_string(member.determinant)},
                         {"j", member.j},
                         {"moment", half_integral_json(member.moment)},
                         {"moment_ok", member.moment_is_expected_diagonal},
                         {"span_ok", member.span_matches_base},
                         {"tuple", {member.tuple[0].coords, member.tuple[1].coords}}});
    }
    emit_json(out, json{{"determinants_increasing", family.determinants_increasing},
                        {"lambda1", family.lambda1.coords},
                        {"lambda1_norm", family.lambda1_norm},
                        {"lambda2", family.lambda2.coords},
                        {"m", args.m},
                        {"members", members}});
    if (!family.all_checks_pass()) {
      err << "family check failed\n";
      return kExitCheckFailure;
    }
    return kExitSuccess;
  }

  throw UsageError("unknown lattice subcommand '" + args.subcommand + "'");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact special-cycle class, ray and cone computations"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "csv";
  std::string cache_dir;
  bool full = false;

  auto add_common = [&](CLI::App* sub, bool with_cache) {
    sub->add_option("--n", config.n, "Signature n of the lattice (weight k = 1 + n/2)");
    sub->add_option("--weight", config.weight, "Even weight k >= 4 (non-physical escape hatch)");
    sub->add_option("--max-m", config.max_m, "Largest index m")->required();
    sub->add_option("--precision", config.precision, "q-expansion precision (>= max-m + 1)");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    auto* prim = sub->add_flag("--primitive", "Use primitive Heegner classes P_m (default)");
    auto* full_flag = sub->add_flag("--full", full, "Use Heegner classes H_m");
    prim->excludes(full_flag);
    if (with_cache) sub->add_option("--cache-dir", cache_dir, "Directory for cached Miller bases");
  };

  auto* identities = app.add_subcommand("identities", "Check the Eisenstein identities for m <= max-m");
  add_common(identities, false);
  auto* converge = app.add_subcommand("converge", "Ray distances to the Kaehler ray");
  add_common(converge, true);
  auto* cone = app.add_subcommand("cone", "Truncated accumulation cone report (JSON)");
  add_common(cone, true);

  LatticeArgs lattice_args;
  auto* lattice = app.add_subcommand("lattice", "Lattice utilities");
  lattice->require_subcommand(1);
  auto* build = lattice->add_subcommand("build", "Gram matrix of U + U + E8^k");
  build->add_option("--n", lattice_args.n)->required();
  auto* moment = lattice->add_subcommand("moment", "Moment matrix of a vector tuple");
  moment->add_option("--n", lattice_args.n);
  moment->add_option("--vectors", lattice_args.vectors, "JSON array of coordinate rows")->required();
  auto* reduce = lattice->add_subcommand("reduce", "GL2(Z) reduction of a doubled binary matrix");
  reduce->add_option("--matrix", lattice_args.matrix, "JSON doubled matrix [[a,b],[b,c]]")->required();
  auto* family = lattice->add_subcommand("family", "Common-component family");
  family->add_option("--n", lattice_args.n);
  family->add_option("--m", lattice_args.m)->required();
  family->add_option("--jmax", lattice_args.j_max)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitSuccess : kExitUsage;
  }

  config.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
  config.primitive = !full;
  if (!cache_dir.empty()) config.cache_dir = cache_dir;

  try {
    if (identities->parsed()) return cmd_identities(config, out, err);
    if (converge->parsed()) return cmd_converge(config, out, err);
    if (cone->parsed()) return cmd_cone(config, out, err);
    for (auto* sub : {build, moment, reduce, family}) {
      if (sub->parsed()) {
        lattice_args.subcommand = sub->get_name();
        return cmd_lattice(lattice_args, out, err);
      }
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cyclecone::cli
