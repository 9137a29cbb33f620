#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ccsubmod/bitvector.hpp"

namespace ccsubmod {

using NodeId = std::uint32_t;

enum class GraphFormat { matrix_market, edge_list, automatic };

GraphFormat parse_graph_format(const std::string& name);

class GraphParseError : public std::runtime_error {
public:
    GraphParseError(const std::string& source, std::size_t line, const std::string& what)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Undirected simple graph, immutable after construction.
///
/// Adjacency and closed neighborhoods are kept in compressed sparse row form;
/// every neighbor list is sorted and free of duplicates and self-loops.
class Graph {
public:
    Graph() = default;

    /// Builds from 0-based edges. Self-loops are dropped, duplicates and
    /// reversed duplicates merged. Throws if an endpoint is >= n.
    static Graph from_edges(std::size_t n, std::span<const std::pair<NodeId, NodeId>> edges);

    [[nodiscard]] std::size_t node_count() const noexcept { return n_; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return adj_targets_.size() / 2; }

    [[nodiscard]] std::span<const NodeId> neighbors(NodeId v) const noexcept {
        return {adj_targets_.data() + adj_offsets_[v], adj_targets_.data() + adj_offsets_[v + 1]};
    }
    /// v together with its neighbors, sorted.
    [[nodiscard]] std::span<const NodeId> closed_neighborhood(NodeId v) const noexcept {
        return {closed_targets_.data() + closed_offsets_[v], closed_targets_.data() + closed_offsets_[v + 1]};
    }
    [[nodiscard]] BitVector closed_neighborhood_bits(NodeId v) const;
    [[nodiscard]] std::size_t degree(NodeId v) const noexcept { return adj_offsets_[v + 1] - adj_offsets_[v]; }

    /// Canonical edge set with u < v, lexicographically sorted.
    [[nodiscard]] std::vector<std::pair<NodeId, NodeId>> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::size_t> adj_offsets_{0};
    std::vector<NodeId> adj_targets_;
    std::vector<std::size_t> closed_offsets_{0};
    std::vector<NodeId> closed_targets_;
};

Graph load_graph(const std::filesystem::path& path, GraphFormat format = GraphFormat::automatic);
Graph parse_graph(std::istream& in, GraphFormat format, const std::string& source_name = "<stream>");

/// Writes a Matrix-Market pattern/symmetric file (1-indexed) that reloads to an equal Graph.
void write_matrix_market(const Graph& graph, std::ostream& out);

/// Number of nodes that are selected or adjacent to a selected node.
std::size_t coverage_count(const Graph& graph, const BitVector& selection);

}  // namespace ccsubmod
