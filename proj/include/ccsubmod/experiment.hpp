#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ccsubmod/algorithms.hpp"
#include "ccsubmod/problem.hpp"

namespace ccsubmod {

/// One algorithm column of an experiment.
struct AlgorithmSpec {
    std::string label;
    RunConfig run;  // t_max and seed are filled per cell
    /// Unset: expected-g2 for same-dispersion weights, surrogate-g2 otherwise.
    std::optional<Regime> regime;
    /// Write a full trace CSV for repetition 0 of every cell of this column.
    bool trace = false;
};

struct ExperimentConfig {
    std::vector<InstanceSpec> instances;
    std::vector<AlgorithmSpec> algorithms;
    std::vector<std::uint64_t> t_max{500000};
    std::size_t repetitions = 30;
    std::uint64_t base_seed = 1;
    std::filesystem::path output_dir = "results";
    std::size_t workers = 1;

    /// Throws std::invalid_argument if the grid is empty or inconsistent.
    void validate() const;
};

/// Parses the JSON experiment file. Relative graph paths are resolved against
/// `base_dir`.
ExperimentConfig experiment_config_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
ExperimentConfig load_experiment_config(const std::filesystem::path& path);
nlohmann::json to_json(const ExperimentConfig& cfg);

Regime default_regime(WeightKind weights);

/// One table row: every algorithm is run on it.
struct RowKey {
    std::string graph;
    WeightKind weights = WeightKind::iid;
    SurrogateKind surrogate = SurrogateKind::chebyshev;
    double budget = 0.0;
    std::uint64_t t_max = 0;
    double alpha = 0.1;
    std::size_t instance_index = 0;

    friend bool operator==(const RowKey&, const RowKey&) = default;
};

struct CellResult {
    RowKey row;
    std::size_t row_index = 0;
    std::size_t algorithm_index = 0;
    std::string cell_id;
    std::vector<RunResult> runs;
    std::optional<std::string> error;

    [[nodiscard]] bool ok() const noexcept { return !error.has_value(); }
    [[nodiscard]] std::vector<double> best_values() const;
};

struct ResultSet {
    std::vector<std::string> algorithm_labels;
    std::vector<RowKey> rows;
    std::vector<CellResult> cells;  // row-major: rows x algorithms

    [[nodiscard]] const CellResult* find(std::size_t row, std::size_t algorithm) const;
    [[nodiscard]] std::size_t failures() const;
};

/// Expands the grid into rows without running anything. Graph files are read
/// to resolve the default budget grid; an unreadable graph without explicit
/// budgets yields placeholder rows with budget 0 whose cells fail.
std::vector<RowKey> expand_rows(const ExperimentConfig& cfg);

struct RunOptions {
    bool resume = false;
    bool write_files = true;
    /// Diagnostics sink; may be null.
    std::ostream* log = nullptr;
};

/// Runs every (row, algorithm) cell for cfg.repetitions seeds. Each cell is
/// persisted under output_dir/cells/ as soon as it completes; with resume,
/// cells already on disk are loaded instead of recomputed. Per-cell failures
/// are recorded and do not stop other cells.
ResultSet run_experiment(const ExperimentConfig& cfg, const RunOptions& options = {});

/// Writes results.json, table.csv and table.md to cfg.output_dir.
void write_outputs(const ExperimentConfig& cfg, const ResultSet& results, std::ostream* log = nullptr);

nlohmann::json to_json(const ResultSet& results, const ExperimentConfig& cfg);

/// Table with rows (graph, surrogate, B, t_max, alpha) and per-algorithm
/// mean, std and statistical marks such as "1(+),3(+),4(+)". Missing cells
/// are left blank and reported in the returned warnings.
std::vector<std::string> emit_table_csv(const ResultSet& results, std::ostream& out);
std::vector<std::string> emit_table_markdown(const ResultSet& results, std::ostream& out);

/// Marks string of column `algorithm` in `row`, e.g. "2(-),3(+)".
std::string stat_marks(const ResultSet& results, std::size_t row, std::size_t algorithm);

/// Fixed formatting used in tables: up to three decimals, trailing zeros trimmed.
std::string format_number(double value);

}  // namespace ccsubmod
