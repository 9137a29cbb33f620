#include "ccsubmod/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

namespace ccsubmod {

GraphFormat parse_graph_format(const std::string& name) {
    if (name == "matrix-market" || name == "mtx") return GraphFormat::matrix_market;
    if (name == "edge-list" || name == "edges") return GraphFormat::edge_list;
    if (name == "auto") return GraphFormat::automatic;
    throw std::invalid_argument("unknown graph format '" + name + "'");
}

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<NodeId, NodeId>> edges) {
    std::vector<std::pair<NodeId, NodeId>> directed;
    directed.reserve(edges.size() * 2);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) throw std::out_of_range("edge endpoint exceeds node count");
        if (u == v) continue;
        directed.emplace_back(u, v);
        directed.emplace_back(v, u);
    }
    std::sort(directed.begin(), directed.end());
    directed.erase(std::unique(directed.begin(), directed.end()), directed.end());

    Graph g;
    g.n_ = n;
    g.adj_offsets_.assign(n + 1, 0);
    for (const auto& e : directed) ++g.adj_offsets_[e.first + 1];
    for (std::size_t v = 0; v < n; ++v) g.adj_offsets_[v + 1] += g.adj_offsets_[v];
    g.adj_targets_.reserve(directed.size());
    for (const auto& e : directed) g.adj_targets_.push_back(e.second);

    g.closed_offsets_.assign(n + 1, 0);
    g.closed_targets_.reserve(directed.size() + n);
    for (std::size_t v = 0; v < n; ++v) {
        const auto nb = g.neighbors(static_cast<NodeId>(v));
        const auto self = static_cast<NodeId>(v);
        auto split = std::lower_bound(nb.begin(), nb.end(), self);
        g.closed_targets_.insert(g.closed_targets_.end(), nb.begin(), split);
        g.closed_targets_.push_back(self);
        g.closed_targets_.insert(g.closed_targets_.end(), split, nb.end());
        g.closed_offsets_[v + 1] = g.closed_targets_.size();
    }
    return g;
}

BitVector Graph::closed_neighborhood_bits(NodeId v) const {
    BitVector bits(n_);
    for (const auto u : closed_neighborhood(v)) bits.set(u);
    return bits;
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(edge_count());
    for (std::size_t u = 0; u < n_; ++u)
        for (const auto v : neighbors(static_cast<NodeId>(u)))
            if (u < v) out.emplace_back(static_cast<NodeId>(u), v);
    return out;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r' || line[i] == ',')) ++i;
        const std::size_t start = i;
        while (i < line.size() && !(line[i] == ' ' || line[i] == '\t' || line[i] == '\r' || line[i] == ',')) ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

bool parse_uint(std::string_view token, std::uint64_t& value) {
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    return ec == std::errc{} && ptr == end;
}

bool is_comment(std::string_view line) {
    std::size_t i = 0;
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    return i < line.size() && (line[i] == '%' || line[i] == '#');
}

bool is_blank(std::string_view line) {
    return std::all_of(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t' || c == '\r'; });
}

}  // namespace

Graph parse_graph(std::istream& in, GraphFormat format, const std::string& source_name) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
    std::vector<std::size_t> raw_lines;
    std::uint64_t declared = 0;
    bool have_header = false;
    bool saw_zero = false;
    std::uint64_t max_id = 0;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1 && line.rfind("%%MatrixMarket", 0) == 0) {
            if (format == GraphFormat::automatic) format = GraphFormat::matrix_market;
            continue;
        }
        if (is_blank(line) || is_comment(line)) continue;
        if (format == GraphFormat::automatic) format = GraphFormat::edge_list;

        const auto tokens = split_ws(line);
        if (format == GraphFormat::matrix_market && !have_header) {
            if (tokens.size() != 3) throw GraphParseError(source_name, line_no, "expected 'rows cols entries' size header");
            std::uint64_t rows = 0, cols = 0, entries = 0;
            if (!parse_uint(tokens[0], rows) || !parse_uint(tokens[1], cols) || !parse_uint(tokens[2], entries))
                throw GraphParseError(source_name, line_no, "non-integer token in size header");
            declared = std::max(rows, cols);
            have_header = true;
            continue;
        }

        // Matrix-Market entries may carry a value column, which is ignored.
        const std::size_t allowed = format == GraphFormat::matrix_market ? 3 : 2;
        if (tokens.size() < 2 || tokens.size() > allowed)
            throw GraphParseError(source_name, line_no, "expected an integer node pair");
        std::uint64_t u = 0, v = 0;
        if (!parse_uint(tokens[0], u) || !parse_uint(tokens[1], v))
            throw GraphParseError(source_name, line_no, "non-integer token");
        if (format == GraphFormat::matrix_market && (u == 0 || v == 0 || u > declared || v > declared))
            throw GraphParseError(source_name, line_no, "node id out of declared range");
        if (u > std::uint64_t{0xFFFFFFFE} || v > std::uint64_t{0xFFFFFFFE})
            throw GraphParseError(source_name, line_no, "node id too large");
        saw_zero = saw_zero || u == 0 || v == 0;
        max_id = std::max({max_id, u, v});
        raw.emplace_back(u, v);
        raw_lines.push_back(line_no);
    }
    if (in.bad()) throw std::runtime_error(source_name + ": read failure");
    if (format == GraphFormat::matrix_market && !have_header)
        throw GraphParseError(source_name, line_no, "missing Matrix-Market size header");

    const bool one_based = format == GraphFormat::matrix_market || !saw_zero;
    std::uint64_t n = one_based ? max_id : max_id + 1;
    n = std::max(n, declared);
    if (raw.empty() && !have_header) n = 0;

    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(raw.size());
    const std::uint64_t shift = one_based ? 1 : 0;
    for (const auto& [u, v] : raw) edges.emplace_back(static_cast<NodeId>(u - shift), static_cast<NodeId>(v - shift));
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph load_graph(const std::filesystem::path& path, GraphFormat format) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file '" + path.string() + "'");
    if (format == GraphFormat::automatic && path.extension() == ".mtx") format = GraphFormat::matrix_market;
    return parse_graph(in, format, path.string());
}

void write_matrix_market(const Graph& graph, std::ostream& out) {
    const auto edges = graph.edges();
    out << "%%MatrixMarket matrix coordinate pattern symmetric\n";
    out << graph.node_count() << ' ' << graph.node_count() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) out << (v + 1) << ' ' << (u + 1) << '\n';
}

std::size_t coverage_count(const Graph& graph, const BitVector& selection) {
    if (selection.size() != graph.node_count()) throw std::invalid_argument("selection length does not match node count");
    thread_local BitVector covered;
    if (covered.size() != graph.node_count()) covered = BitVector(graph.node_count());
    else covered.clear();
    selection.for_each_set([&](std::size_t v) {
        for (const auto u : graph.closed_neighborhood(static_cast<NodeId>(v))) covered.set(u);
    });
    return covered.count();
}

}  // namespace ccsubmod
