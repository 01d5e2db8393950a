#include "gds/experiment.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <utility>

#include "gds/construct.hpp"
#include "gds/error.hpp"
#include "gds/householder.hpp"
#include "gds/random.hpp"
#include "gds/verify.hpp"

namespace gds {

namespace {

constexpr std::array<std::pair<ExperimentId, std::string_view>, 6> kIds{{
    {ExperimentId::table1, "table1"},
    {ExperimentId::table2, "table2"},
    {ExperimentId::table3, "table3"},
    {ExperimentId::table4, "table4"},
    {ExperimentId::example4, "example4"},
    {ExperimentId::example5, "example5"},
}};

ExperimentRow full_row(double param, const GdsReport& r) {
  return ExperimentRow{param, r.err_orth, r.err_rows, r.err_columns, std::nullopt};
}

std::vector<ExperimentRow> run_gds3(const ExperimentConfig& cfg, Matrix (*build)(double)) {
  std::vector<ExperimentRow> rows;
  for (double z : cfg.z_values) rows.push_back(full_row(z, gds_report(build(z))));
  return rows;
}

std::vector<ExperimentRow> run_table3(const ExperimentConfig& cfg) {
  std::vector<ExperimentRow> rows;
  for (std::size_t k = 0; k < cfg.sizes.size(); ++k) {
    const std::size_t n = cfg.sizes[k];
    NormalGenerator gen(derive_seed(cfg.seed, k));
    const Matrix q = extend_to_un_basis(gen.matrix(n, n));
    rows.push_back(ExperimentRow{static_cast<double>(n), orthogonality_error(q), std::nullopt,
                                 std::nullopt, std::nullopt});
  }
  return rows;
}

std::vector<ExperimentRow> run_table4(const ExperimentConfig& cfg) {
  std::vector<ExperimentRow> rows;
  for (std::size_t k = 0; k < cfg.sizes.size(); ++k) {
    const std::size_t n = cfg.sizes[k];
    NormalGenerator gen(derive_seed(cfg.seed, k));
    const Matrix q = extend_to_un_basis(gen.matrix(n, n));
    const Matrix w = qr_householder(gen.matrix(n - 1, n - 1)).q;
    const Matrix a = build_gds_from_block(q, w);
    rows.push_back(full_row(static_cast<double>(n), gds_report(a)));
  }
  return rows;
}

std::vector<ExperimentRow> run_example4(const ExperimentConfig& cfg) {
  const EigSpec spec{2, 3, {{0.6, 0.8}, {-0.8, 0.6}}};
  const std::size_t n = spec.dimension();
  NormalGenerator gen(derive_seed(cfg.seed, 0));
  const Matrix q = extend_to_un_basis(gen.matrix(n, n));
  const Matrix a = build_eig_gds(spec, q);
  auto row = full_row(static_cast<double>(n), gds_report(a));
  row.certificate = verify_eigenpairs(a, spec, q);
  return {row};
}

std::vector<ExperimentRow> run_example5(const ExperimentConfig& cfg) {
  const YbeSeedSpec spec{2, {1.0, -1.0, 1.0, 1.0}};
  const Matrix b = build_ybe_seed(spec);
  NormalGenerator gen(derive_seed(cfg.seed, 0));
  const Matrix p = extend_to_un_basis(gen.matrix(spec.n, spec.n));
  const Matrix a = build_ybe_gds(b, p);
  auto row = full_row(static_cast<double>(a.rows()), gds_report(a));
  row.certificate = ybe_residual(a);
  return {row};
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

void check_at_most(std::vector<std::string>& out, const ExperimentRow& row, double bound,
                   bool include_certificate = false) {
  auto check = [&](const char* name, std::optional<double> v) {
    if (v && !(*v <= bound)) {
      out.push_back("param " + fmt(row.param) + ": " + name + " = " + fmt(*v) + " exceeds " +
                    fmt(bound));
    }
  };
  check("err_orth", row.err_orth);
  check("err_rows", row.err_rows);
  check("err_columns", row.err_columns);
  if (include_certificate) check("certificate", row.certificate);
}

const ExperimentRow* row_at(std::span<const ExperimentRow> rows, double param) {
  for (const auto& r : rows)
    if (r.param == param) return &r;
  return nullptr;
}

void check_table2(std::vector<std::string>& out, std::span<const ExperimentRow> rows) {
  const auto* tiny = row_at(rows, 1e-14);
  const auto* mid = row_at(rows, 1e-6);
  const auto* big = row_at(rows, 1e-3);
  if (tiny && !(tiny->err_orth >= 1e-6 && tiny->err_orth <= 1e-1)) {
    out.push_back("z = 1e-14: err_orth = " + fmt(tiny->err_orth) + " outside [1e-6, 1e-1]");
  }
  if (tiny && mid && !(tiny->err_orth > mid->err_orth)) {
    out.push_back("err_orth does not grow from z = 1e-6 to z = 1e-14");
  }
  if (mid && big && !(mid->err_orth > big->err_orth)) {
    out.push_back("err_orth does not grow from z = 1e-3 to z = 1e-6");
  }
  if (tiny && big && !(tiny->err_orth >= 1e6 * big->err_orth)) {
    out.push_back("err_orth(1e-14) = " + fmt(tiny->err_orth) + " is not 1e6 x err_orth(1e-3) = " +
                  fmt(big->err_orth));
  }
}

}  // namespace

std::string_view to_string(ExperimentId id) {
  for (const auto& [value, name] : kIds)
    if (value == id) return name;
  return "unknown";
}

std::optional<ExperimentId> parse_experiment_id(std::string_view text) {
  for (const auto& [value, name] : kIds)
    if (name == text) return value;
  return std::nullopt;
}

std::string valid_experiment_ids() {
  std::string out;
  for (const auto& [value, name] : kIds) {
    if (!out.empty()) out += ", ";
    out += name;
  }
  return out;
}

ExperimentConfig ExperimentConfig::defaults(ExperimentId id, std::uint64_t seed) {
  ExperimentConfig cfg;
  cfg.id = id;
  cfg.seed = seed;
  if (id == ExperimentId::table1 || id == ExperimentId::table2) {
    cfg.z_values = {1e-3, 1e-6, 1e-9, 1e-12, 1e-14};
  } else if (id == ExperimentId::table3 || id == ExperimentId::table4) {
    cfg.sizes = {10, 50, 100, 500, 1000};
  }
  return cfg;
}

void ExperimentConfig::validate() const {
  switch (id) {
    case ExperimentId::table1:
    case ExperimentId::table2:
      if (z_values.empty()) throw ValidationError(std::string(to_string(id)) + " needs z values");
      break;
    case ExperimentId::table3:
    case ExperimentId::table4: {
      if (sizes.empty()) throw ValidationError(std::string(to_string(id)) + " needs sizes");
      const std::size_t min_n = id == ExperimentId::table4 ? 2 : 1;
      for (std::size_t n : sizes) {
        if (n < min_n) {
          throw ValidationError(std::string(to_string(id)) + " sizes must be at least " +
                                std::to_string(min_n));
        }
      }
      break;
    }
    case ExperimentId::example4:
    case ExperimentId::example5:
      break;
  }
}

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  switch (cfg.id) {
    case ExperimentId::table1: return run_gds3(cfg, &build_gds3_stable);
    case ExperimentId::table2: return run_gds3(cfg, &build_gds3_unstable);
    case ExperimentId::table3: return run_table3(cfg);
    case ExperimentId::table4: return run_table4(cfg);
    case ExperimentId::example4: return run_example4(cfg);
    case ExperimentId::example5: return run_example5(cfg);
  }
  throw ValidationError("unknown experiment id");
}

std::vector<std::string> acceptance_violations(const ExperimentConfig& cfg,
                                               std::span<const ExperimentRow> rows) {
  std::vector<std::string> out;
  for (const auto& row : rows) {
    switch (cfg.id) {
      case ExperimentId::table1: check_at_most(out, row, 1e-14); break;
      case ExperimentId::table2: break;
      case ExperimentId::table3: check_at_most(out, row, 1e-13); break;
      case ExperimentId::table4:
        check_at_most(out, row, 1e-12);
        if (!(row.err_orth <= 1e-13)) {
          out.push_back("param " + fmt(row.param) + ": err_orth = " + fmt(row.err_orth) +
                        " exceeds 1e-13");
        }
        break;
      case ExperimentId::example4: check_at_most(out, row, 1e-13, true); break;
      case ExperimentId::example5:
        check_at_most(out, row, 1e-13);
        if (row.certificate && !(*row.certificate <= 1e-12)) {
          out.push_back("ybe residual " + fmt(*row.certificate) + " exceeds 1e-12");
        }
        break;
    }
  }
  if (cfg.id == ExperimentId::table2) check_table2(out, rows);
  return out;
}

}  // namespace gds
