#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "ccsubmod/experiment.hpp"
#include "ccsubmod/stats.hpp"

namespace ccsubmod {

std::string format_number(double value) {
    if (!std::isfinite(value)) return "";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", value);
    std::string s = buf;
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    if (s == "-0") s = "0";
    return s;
}

namespace {

struct Summary {
    bool present = false;
    double mean = 0.0;
    double std = 0.0;
    std::string marks;
};

std::vector<std::vector<stats::Mark>> row_marks(const ResultSet& results, std::size_t row,
                                                std::vector<std::size_t>& columns) {
    std::vector<std::vector<double>> groups;
    columns.clear();
    for (std::size_t a = 0; a < results.algorithm_labels.size(); ++a) {
        const auto* cell = results.find(row, a);
        if (cell == nullptr || !cell->ok() || cell->runs.empty()) continue;
        columns.push_back(a);
        groups.push_back(cell->best_values());
    }
    if (groups.size() < 2) return std::vector<std::vector<stats::Mark>>(groups.size(), std::vector<stats::Mark>(groups.size(), stats::Mark::equal));
    return stats::posthoc_marks(groups);
}

std::vector<Summary> summarize_row(const ResultSet& results, std::size_t row, std::vector<std::string>& warnings) {
    const std::size_t k = results.algorithm_labels.size();
    std::vector<Summary> out(k);
    std::vector<std::size_t> columns;
    const auto marks = row_marks(results, row, columns);
    for (std::size_t ci = 0; ci < columns.size(); ++ci) {
        const auto a = columns[ci];
        const auto values = results.find(row, a)->best_values();
        auto& s = out[a];
        s.present = true;
        s.mean = stats::mean(values);
        s.std = stats::stddev(values);
        for (std::size_t cj = 0; cj < columns.size(); ++cj) {
            if (cj == ci) continue;
            if (!s.marks.empty()) s.marks += ',';
            s.marks += std::to_string(columns[cj] + 1) + "(" + stats::to_char(marks[ci][cj]) + ")";
        }
    }
    for (std::size_t a = 0; a < k; ++a) {
        if (out[a].present) continue;
        const auto* cell = results.find(row, a);
        std::string reason = cell == nullptr ? "missing" : cell->error.value_or("no runs");
        warnings.push_back("row " + std::to_string(row) + " column '" + results.algorithm_labels[a] + "': " + reason);
    }
    return out;
}

std::vector<std::string> row_prefix(const RowKey& row) {
    return {row.graph, to_string(row.weights), to_string(row.surrogate), format_number(row.budget),
            std::to_string(row.t_max), format_number(row.alpha)};
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (const char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string stat_marks(const ResultSet& results, std::size_t row, std::size_t algorithm) {
    std::vector<std::string> ignored;
    return summarize_row(results, row, ignored)[algorithm].marks;
}

std::vector<std::string> emit_table_csv(const ResultSet& results, std::ostream& out) {
    std::vector<std::string> warnings;
    std::vector<std::string> header{"graph", "weights", "surrogate", "B", "t_max", "alpha"};
    for (std::size_t a = 0; a < results.algorithm_labels.size(); ++a) {
        const auto tag = results.algorithm_labels[a] + " (" + std::to_string(a + 1) + ")";
        header.push_back(tag + " mean");
        header.push_back(tag + " std");
        header.push_back(tag + " stat");
    }
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << csv_escape(header[i]);
    out << '\n';
    for (std::size_t r = 0; r < results.rows.size(); ++r) {
        auto fields = row_prefix(results.rows[r]);
        for (const auto& s : summarize_row(results, r, warnings)) {
            fields.push_back(s.present ? format_number(s.mean) : "");
            fields.push_back(s.present ? format_number(s.std) : "");
            fields.push_back(s.present ? s.marks : "");
        }
        for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_escape(fields[i]);
        out << '\n';
    }
    return warnings;
}

std::vector<std::string> emit_table_markdown(const ResultSet& results, std::ostream& out) {
    std::vector<std::string> warnings;
    out << "| Graph | Weights | Surrogate | B | t_max | alpha |";
    for (std::size_t a = 0; a < results.algorithm_labels.size(); ++a)
        out << ' ' << results.algorithm_labels[a] << " (" << a + 1 << ") mean | std | stat |";
    out << "\n|---|---|---|---|---|---|";
    for (std::size_t a = 0; a < results.algorithm_labels.size(); ++a) out << "---|---|---|";
    out << '\n';
    for (std::size_t r = 0; r < results.rows.size(); ++r) {
        out << '|';
        for (const auto& f : row_prefix(results.rows[r])) out << ' ' << f << " |";
        const auto summaries = summarize_row(results, r, warnings);
        double best = -INFINITY;
        for (const auto& s : summaries)
            if (s.present) best = std::max(best, s.mean);
        for (const auto& s : summaries) {
            if (!s.present) {
                out << "  |  |  |";
                continue;
            }
            const auto m = format_number(s.mean);
            out << ' ' << (s.mean == best ? "**" + m + "**" : m) << " | " << format_number(s.std) << " | " << s.marks
                << " |";
        }
        out << '\n';
    }
    return warnings;
}

}  // namespace ccsubmod
