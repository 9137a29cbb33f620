#pragma once

#include <iosfwd>

#include <json.hpp>

#include "ccsubmod/algorithms.hpp"

namespace ccsubmod {

nlohmann::json to_json(const RunConfig& cfg);
RunConfig run_config_from_json(const nlohmann::json& j);

/// {config, best_g1, best_g2, best_individual_bits (hex), archive_size,
///  peak_archive_size, evaluations, front, [wall_time_s]}. The trace is not
/// included; it is written separately as CSV.
nlohmann::json to_json(const RunResult& result, bool include_wall_time);
RunResult run_result_from_json(const nlohmann::json& j, std::size_t n);

/// Columns: t,parent_g2,g1,g2,accepted,in_window,window_size.
void write_trace_csv(const RunResult& result, std::ostream& out);

}  // namespace ccsubmod
