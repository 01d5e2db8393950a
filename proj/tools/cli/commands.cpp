#include "cli/commands.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli/matrix_io.hpp"
#include "gds/gds.hpp"

namespace gds::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> items;
  if (trim(text).empty()) return items;
  while (true) {
    const auto comma = text.find(',');
    items.push_back(trim(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return items;
}

std::optional<double> to_double(std::string_view s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

// Shortest representation that parses back to the same double.
std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

json report_json(const GdsReport& r) {
  return json{{"n", r.n}, {"err_orth", r.err_orth}, {"err_rows", r.err_rows},
              {"err_columns", r.err_columns}};
}

MatrixFormat resolve_format(const std::string& flag, const fs::path& path) {
  if (flag.empty()) return format_from_path(path);
  return *parse_format(flag);
}

json matrix_json(const Matrix& m) {
  return json{{"rows", m.rows()},
              {"cols", m.cols()},
              {"data", std::vector<double>(m.data().begin(), m.data().end())}};
}

Matrix matrix_from_json(const json& j) {
  std::istringstream in(j.dump());
  return read_matrix_json(in);
}

// --- gen3 ------------------------------------------------------------------

struct Gen3Options {
  double z = 0.0;
  std::string variant = "stable";
  std::string out = "gen3.json";
  std::string format;
};

int cmd_gen3(const Gen3Options& o, std::ostream& out) {
  const Matrix a = o.variant == "unstable" ? build_gds3_unstable(o.z) : build_gds3_stable(o.z);
  write_matrix(o.out, a, resolve_format(o.format, o.out));
  auto report = report_json(gds_report(a));
  report["command"] = "gen3";
  report["variant"] = o.variant;
  report["z"] = o.z;
  report["out"] = o.out;
  out << report.dump() << '\n';
  return kSuccess;
}

// --- gen -------------------------------------------------------------------

struct GenOptions {
  std::string kind;
  std::optional<std::size_t> n;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> r;
  std::optional<std::size_t> p;
  std::string pairs;
  std::string d;
  std::string x;
  std::string out = "gen.json";
  std::string format;
};

std::size_t require_n(const GenOptions& o, std::size_t minimum) {
  if (!o.n) throw ValidationError("--n is required for --kind " + o.kind);
  if (*o.n < minimum) {
    throw ValidationError("--n must be at least " + std::to_string(minimum) + " for --kind " +
                          o.kind);
  }
  return *o.n;
}

// Input to the basis completion: the --x file when given, else the next n x n draw.
Matrix basis_input(const GenOptions& o, std::size_t n, NormalGenerator& gen) {
  if (o.x.empty()) return gen.matrix(n, n);
  Matrix x = read_matrix(o.x, format_from_path(o.x));
  if (x.rows() != n || x.cols() != n) {
    throw DimensionError("--x matrix is " + shape_string(x) + " but " + std::to_string(n) + "x" +
                         std::to_string(n) + " is needed");
  }
  return x;
}

int cmd_gen(const GenOptions& o, std::ostream& out) {
  NormalGenerator gen(o.seed.value_or(default_seed()));
  json extra = json::object();
  std::optional<Matrix> result;

  if (o.kind == "basis") {
    const std::size_t n = (!o.n && !o.x.empty())
                              ? read_matrix(o.x, format_from_path(o.x)).rows()
                              : require_n(o, 1);
    result = extend_to_un_basis(basis_input(o, n, gen));
    extra["first_column_error"] = first_column_error(*result);
  } else if (o.kind == "gds") {
    const std::size_t n = require_n(o, 2);
    const Matrix q = extend_to_un_basis(basis_input(o, n, gen));
    const Matrix w = qr_householder(gen.matrix(n - 1, n - 1)).q;
    result = build_gds_from_block(q, w);
  } else if (o.kind == "eig") {
    if (!o.r || !o.p) throw ValidationError("--kind eig requires --r and --p (and --pairs)");
    const EigSpec spec{*o.r, *o.p, parse_pairs(o.pairs)};
    spec.validate();
    const std::size_t n = spec.dimension();
    if (o.n && *o.n != n) {
      throw ValidationError("--n " + std::to_string(*o.n) + " contradicts r + p + 2m = " +
                            std::to_string(n));
    }
    const Matrix q = extend_to_un_basis(basis_input(o, n, gen));
    result = build_eig_gds(spec, q);
    extra["eig_residual"] = verify_eigenpairs(*result, spec, q);

    json pairs = json::array();
    for (const auto& z : spec.pairs) pairs.push_back({z.real(), z.imag()});
    const json sidecar{{"r", spec.plus_ones}, {"p", spec.minus_ones}, {"pairs", pairs},
                       {"q", matrix_json(q)}};
    const std::string sidecar_path = o.out + ".eig.json";
    std::ofstream side(sidecar_path);
    if (!side) throw FormatError("cannot open '" + sidecar_path + "' for writing");
    side << sidecar.dump() << '\n';
    extra["eig_spec"] = sidecar_path;
  } else if (o.kind == "ybe-seed" || o.kind == "ybe") {
    const std::size_t n = require_n(o, 2);
    if (o.d.empty()) throw ValidationError("--d is required for --kind " + o.kind);
    const YbeSeedSpec spec{n, parse_real_list(o.d)};
    if (o.kind == "ybe-seed") {
      result = build_ybe_seed(spec);
    } else {
      spec.validate_orthogonal_mode();
      const Matrix b = build_ybe_seed(spec);
      result = build_ybe_gds(b, extend_to_un_basis(basis_input(o, n, gen)));
    }
    extra["ybe_residual"] = ybe_residual(*result);
  }

  write_matrix(o.out, *result, resolve_format(o.format, o.out));
  auto report = report_json(gds_report(*result));
  report["command"] = "gen";
  report["kind"] = o.kind;
  report["out"] = o.out;
  report.update(extra);
  out << report.dump() << '\n';
  return kSuccess;
}

// --- verify ----------------------------------------------------------------

struct VerifyOptions {
  std::string in;
  std::string checks = "gds,orth";
  std::string eig_spec;
  double tol = 1e-10;
  std::string format;
};

EigSpec eig_spec_from_json(const json& j) {
  EigSpec spec;
  spec.plus_ones = j.at("r").get<std::size_t>();
  spec.minus_ones = j.at("p").get<std::size_t>();
  for (const auto& pair : j.at("pairs")) {
    spec.pairs.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
  }
  return spec;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  if (!(o.tol > 0.0)) throw ValidationError("--tol must be positive");
  const Matrix a = read_matrix(o.in, resolve_format(o.format, o.in));
  json checks = json::object();
  bool pass = true;

  for (const auto name : split_commas(o.checks)) {
    if (name == "gds") {
      if (!a.is_square()) throw DimensionError("gds check needs a square matrix, got " + shape_string(a));
      const double rows = row_sum_error(a);
      const double cols = column_sum_error(a);
      const bool ok = rows <= o.tol && cols <= o.tol;
      checks["gds"] = {{"err_rows", rows}, {"err_columns", cols}, {"pass", ok}};
      pass = pass && ok;
    } else if (name == "orth") {
      if (!a.is_square()) throw DimensionError("orth check needs a square matrix, got " + shape_string(a));
      const double err = orthogonality_error(a);
      const bool ok = err <= o.tol;
      checks["orth"] = {{"err_orth", err}, {"pass", ok}};
      pass = pass && ok;
    } else if (name == "ybe") {
      const double res = ybe_residual(a);
      const bool ok = res <= o.tol;
      checks["ybe"] = {{"residual", res}, {"pass", ok}};
      pass = pass && ok;
    } else if (name == "eig") {
      if (o.eig_spec.empty()) throw ValidationError("eig check needs --eig-spec");
      std::ifstream in(o.eig_spec);
      if (!in) throw FormatError("cannot open '" + o.eig_spec + "'");
      json j;
      try {
        j = json::parse(in);
      } catch (const json::parse_error& e) {
        throw FormatError(o.eig_spec + ": malformed JSON at byte " + std::to_string(e.byte));
      }
      EigSpec spec;
      std::optional<Matrix> q;
      try {
        spec = eig_spec_from_json(j);
        q = matrix_from_json(j.at("q"));
      } catch (const json::exception& e) {
        throw FormatError(o.eig_spec + ": " + e.what());
      }
      const double res = verify_eigenpairs(a, spec, *q);
      const bool ok = res <= o.tol;
      checks["eig"] = {{"residual", res}, {"pass", ok}};
      pass = pass && ok;
    } else {
      throw ValidationError("unknown check '" + std::string(name) +
                            "'; valid checks: gds, orth, ybe, eig");
    }
  }
  if (checks.empty()) throw ValidationError("--checks selects nothing");

  const json report{{"command", "verify"}, {"in", o.in},        {"rows", a.rows()},
                    {"cols", a.cols()},    {"tol", o.tol},      {"checks", checks},
                    {"pass", pass}};
  out << report.dump() << '\n';
  return pass ? kSuccess : kCheckFailed;
}

// --- bench -----------------------------------------------------------------

struct BenchOptions {
  std::string id;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string sizes;
  std::string z;
};

int cmd_bench(const BenchOptions& o, std::ostream& out) {
  const auto id = parse_experiment_id(o.id);
  if (!id) {
    throw ValidationError("unknown experiment id '" + o.id + "'; valid ids: " +
                          valid_experiment_ids());
  }
  auto cfg = ExperimentConfig::defaults(*id, o.seed.value_or(default_seed()));
  if (!o.sizes.empty()) {
    cfg.sizes.clear();
    for (double v : parse_real_list(o.sizes)) {
      if (v < 1 || v != std::floor(v)) throw ValidationError("--sizes must be positive integers");
      cfg.sizes.push_back(static_cast<std::size_t>(v));
    }
  }
  if (!o.z.empty()) cfg.z_values = parse_real_list(o.z);

  const auto rows = run_experiment(cfg);
  const auto violations = acceptance_violations(cfg, rows);
  const std::string csv_path = o.out.empty() ? std::string(to_string(*id)) + ".csv" : o.out;

  {
    std::ofstream csv(csv_path);
    if (!csv) throw FormatError("cannot open '" + csv_path + "' for writing");
    csv << "param,err_orth,err_rows,err_columns\n";
    auto opt = [](const std::optional<double>& v) { return v ? shortest(*v) : std::string(); };
    for (const auto& r : rows) {
      csv << shortest(r.param) << ',' << shortest(r.err_orth) << ',' << opt(r.err_rows) << ','
          << opt(r.err_columns) << '\n';
    }
  }

  json jrows = json::array();
  for (const auto& r : rows) {
    json row{{"param", r.param}, {"err_orth", r.err_orth}};
    if (r.err_rows) row["err_rows"] = *r.err_rows;
    if (r.err_columns) row["err_columns"] = *r.err_columns;
    if (r.certificate) row["certificate"] = *r.certificate;
    jrows.push_back(row);
  }
  const bool pass = violations.empty();
  const json sidecar{{"id", to_string(*id)}, {"seed", cfg.seed}, {"sizes", cfg.sizes},
                     {"z_values", cfg.z_values}, {"rows", jrows},  {"violations", violations},
                     {"pass", pass}};
  const std::string sidecar_path = csv_path + ".json";
  std::ofstream side(sidecar_path);
  if (!side) throw FormatError("cannot open '" + sidecar_path + "' for writing");
  side << sidecar.dump(2) << '\n';

  out << json{{"command", "bench"}, {"id", to_string(*id)}, {"rows", rows.size()},
              {"out", csv_path}, {"pass", pass}, {"violations", violations}}
             .dump()
      << '\n';
  return pass ? kSuccess : kCheckFailed;
}

}  // namespace

std::vector<std::complex<double>> parse_pairs(std::string_view text) {
  std::vector<std::complex<double>> pairs;
  for (const auto item : split_commas(text)) {
    const std::string shown(item);
    if (item.size() < 2 || item.back() != 'i') {
      throw ValidationError("pair '" + shown + "' must look like c+si or c-si");
    }
    const auto body = item.substr(0, item.size() - 1);
    // Split at the last sign that does not belong to an exponent.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
      if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
        split = k;
        break;
      }
    }
    if (split == std::string_view::npos) {
      throw ValidationError("pair '" + shown + "' needs an explicitly signed imaginary part");
    }
    auto imag_text = body.substr(split);
    if (imag_text.front() == '+') imag_text.remove_prefix(1);
    const auto c = to_double(trim(body.substr(0, split)));
    const auto s = to_double(imag_text);
    if (!c || !s) throw ValidationError("pair '" + shown + "' is not a valid complex number");
    if (*s == 0.0) {
      throw ValidationError("pair '" + shown +
                            "' has zero imaginary part; declare real eigenvalues via --r/--p");
    }
    pairs.emplace_back(*c, *s);
  }
  return pairs;
}

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> values;
  for (const auto item : split_commas(text)) {
    const auto v = to_double(item);
    if (!v) throw ValidationError("'" + std::string(item) + "' is not a number");
    values.push_back(*v);
  }
  return values;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("GDS_DEFAULT_SEED");
  if (env == nullptr || *env == '\0') return 0;
  std::uint64_t seed = 0;
  const std::string_view s(env);
  const auto res = std::from_chars(s.data(), s.data() + s.size(), seed);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ValidationError("GDS_DEFAULT_SEED must be a non-negative integer, got '" +
                          std::string(s) + "'");
  }
  return seed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct and verify orthogonal generalized doubly stochastic matrices", "gds"};
  app.require_subcommand(1);

  Gen3Options gen3;
  auto* gen3_cmd = app.add_subcommand("gen3", "Symmetric 3x3 orthogonal g.d.s. matrix from z");
  gen3_cmd->add_option("--z", gen3.z, "Parameter z in [-1/3, 1]")->required();
  gen3_cmd->add_option("--variant", gen3.variant, "stable | unstable")
      ->check(CLI::IsMember({"stable", "unstable"}));
  gen3_cmd->add_option("--out", gen3.out, "Output matrix file");
  gen3_cmd->add_option("--format", gen3.format, "json | csv (default: from extension)")
      ->check(CLI::IsMember({"json", "csv"}));

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Construct a matrix with one of the n x n builders");
  gen_cmd->add_option("--kind", gen.kind, "basis | gds | eig | ybe-seed | ybe")
      ->required()
      ->check(CLI::IsMember({"basis", "gds", "eig", "ybe-seed", "ybe"}));
  gen_cmd->add_option("--n", gen.n, "Dimension (base dimension for ybe kinds)");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed (default $GDS_DEFAULT_SEED or 0)");
  gen_cmd->add_option("--r", gen.r, "Number of eigenvalues equal to +1 (eig)");
  gen_cmd->add_option("--p", gen.p, "Number of eigenvalues equal to -1 (eig)");
  gen_cmd->add_option("--pairs", gen.pairs, "Unit-modulus pairs, e.g. \"0.6+0.8i,-0.8+0.6i\"");
  gen_cmd->add_option("--d", gen.d, "Comma-separated n^2 scalings (ybe kinds)");
  gen_cmd->add_option("--x", gen.x, "Matrix file replacing the random input to the U_n basis");
  gen_cmd->add_option("--out", gen.out, "Output matrix file");
  gen_cmd->add_option("--format", gen.format, "json | csv (default: from extension)")
      ->check(CLI::IsMember({"json", "csv"}));

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a matrix file");
  verify_cmd->add_option("--in", verify.in, "Matrix file")->required();
  verify_cmd->add_option("--checks", verify.checks, "Comma list of gds, orth, ybe, eig");
  verify_cmd->add_option("--eig-spec", verify.eig_spec, "Sidecar written by gen --kind eig");
  verify_cmd->add_option("--tol", verify.tol, "Pass threshold for every check");
  verify_cmd->add_option("--format", verify.format, "json | csv (default: from extension)")
      ->check(CLI::IsMember({"json", "csv"}));

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Reproduce one of the reference experiments");
  bench_cmd->add_option("--id", bench.id, valid_experiment_ids())->required();
  bench_cmd->add_option("--seed", bench.seed, "RNG seed (default $GDS_DEFAULT_SEED or 0)");
  bench_cmd->add_option("--out", bench.out, "CSV output (default <id>.csv)");
  bench_cmd->add_option("--sizes", bench.sizes, "Override the n grid, e.g. \"10,50\"");
  bench_cmd->add_option("--z", bench.z, "Override the z grid, e.g. \"1e-3,1e-14\"");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*gen3_cmd) return cmd_gen3(gen3, out);
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*bench_cmd) return cmd_bench(bench, out);
  } catch (const gds::Error& e) {
    err << "gds: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "gds: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace gds::cli
