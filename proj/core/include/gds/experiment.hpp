#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gds {

enum class ExperimentId { table1, table2, table3, table4, example4, example5 };

std::string_view to_string(ExperimentId id);
std::optional<ExperimentId> parse_experiment_id(std::string_view text);
/// "table1, table2, ..." for error messages.
std::string valid_experiment_ids();

/// What to run. `sizes` feeds table3/table4, `z_values` feeds table1/table2;
/// both are ignored by the other experiments.
struct ExperimentConfig {
  ExperimentId id = ExperimentId::table1;
  std::uint64_t seed = 0;
  std::vector<std::size_t> sizes;
  std::vector<double> z_values;

  /// Default parameter grid: z in {1e-3, 1e-6, 1e-9, 1e-12, 1e-14} for
  /// table1/table2, n in {10, 50, 100, 500, 1000} for table3/table4.
  static ExperimentConfig defaults(ExperimentId id, std::uint64_t seed = 0);

  /// Throws ValidationError on an empty grid or a table4 size below 2.
  void validate() const;
};

/// One measured configuration. `param` is z (tables 1-2) or the matrix
/// dimension. table3 only measures err_orth. `certificate` carries the
/// eigenpair residual (example4) or the Yang-Baxter residual (example5).
struct ExperimentRow {
  double param = 0.0;
  double err_orth = 0.0;
  std::optional<double> err_rows;
  std::optional<double> err_columns;
  std::optional<double> certificate;
};

/// Rows come back in grid order. Row k draws its random numbers from
/// NormalGenerator(derive_seed(cfg.seed, k)), so every row is reproducible on
/// its own.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg);

/// Human-readable descriptions of every acceptance bound the rows violate;
/// empty when all bounds hold.
///   table1:   every statistic <= 1e-14
///   table2:   err_orth(1e-14) in [1e-6, 1e-1], err_orth strictly larger for
///             smaller z among {1e-3, 1e-6, 1e-14}, and
///             err_orth(1e-14) >= 1e6 * err_orth(1e-3)
///   table3:   err_orth <= 1e-13
///   table4:   every statistic <= 1e-12, err_orth <= 1e-13
///   example4: every statistic and the eigenpair residual <= 1e-13
///   example5: every statistic <= 1e-13, Yang-Baxter residual <= 1e-12
std::vector<std::string> acceptance_violations(const ExperimentConfig& cfg,
                                               std::span<const ExperimentRow> rows);

}  // namespace gds
