#include "hamuhi/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>

namespace hamuhi {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

Graph Graph::from_edges(VertexId vertex_count, std::vector<Edge> edges,
                        std::vector<std::string> labels) {
    for (Edge& e : edges) {
        if (e.v == e.u) throw std::invalid_argument("Graph::from_edges: self-loop");
        if (e.v >= vertex_count || e.u >= vertex_count)
            throw std::invalid_argument("Graph::from_edges: endpoint out of range");
        if (e.v > e.u) std::swap(e.v, e.u);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.vertex_count_ = vertex_count;
    g.edges_ = std::move(edges);

    std::vector<VertexId> degree(vertex_count, 0);
    for (const Edge& e : g.edges_) {
        ++degree[e.v];
        ++degree[e.u];
    }
    g.offsets_.assign(vertex_count + 1, 0);
    for (VertexId v = 0; v < vertex_count; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
    g.adjacency_.resize(g.offsets_[vertex_count]);
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const Edge& e : g.edges_) {
        g.adjacency_[cursor[e.v]++] = e.u;
        g.adjacency_[cursor[e.u]++] = e.v;
    }
    // Edge array is sorted, so each list is filled in increasing order except
    // for the mixed v/u interleaving; one sort pass per list keeps it simple.
    for (VertexId v = 0; v < vertex_count; ++v)
        std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
                  g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));

    if (labels.empty()) {
        labels.reserve(vertex_count);
        for (VertexId v = 0; v < vertex_count; ++v) labels.push_back(std::to_string(v));
    } else if (labels.size() != vertex_count) {
        throw std::invalid_argument("Graph::from_edges: label count mismatch");
    }
    g.labels_ = std::move(labels);
    return g;
}

void Graph::check_vertex(VertexId v) const {
    if (v >= vertex_count_) throw std::out_of_range("Graph: vertex id out of range");
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
    check_vertex(v);
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

VertexId Graph::degree(VertexId v) const {
    check_vertex(v);
    return static_cast<VertexId>(offsets_[v + 1] - offsets_[v]);
}

bool Graph::has_edge(VertexId v, VertexId u) const {
    check_vertex(v);
    check_vertex(u);
    if (v == u) return false;
    if (degree(v) > degree(u)) std::swap(v, u);
    auto list = neighbors(v);
    return std::binary_search(list.begin(), list.end(), u);
}

const std::string& Graph::label(VertexId v) const {
    check_vertex(v);
    return labels_[v];
}

namespace {

std::size_t split_tokens(std::string_view line, std::string_view out[3]) {
    std::size_t count = 0;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (count < 3) out[count] = line.substr(start, i - start);
        ++count;
    }
    return count;
}

}  // namespace

LoadResult load_edge_list(std::istream& in) {
    LoadResult result;
    std::unordered_map<std::string, VertexId> id_of;
    std::vector<std::string> labels;
    std::vector<Edge> raw;

    auto intern = [&](std::string_view token) {
        auto [it, inserted] = id_of.try_emplace(std::string(token),
                                                static_cast<VertexId>(labels.size()));
        if (inserted) labels.push_back(it->first);
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view tokens[3];
        std::size_t count = split_tokens(line, tokens);
        if (count == 0) continue;
        if (tokens[0].front() == '#' || tokens[0].front() == '%') continue;
        if (count == 1 || count > 3)
            throw ParseError(line_no, "expected two vertex ids, got " + std::to_string(count) +
                                          " token(s)");
        if (count == 3) ++result.extra_column_lines;

        VertexId a = intern(tokens[0]);
        VertexId b = intern(tokens[1]);
        if (a == b) {
            ++result.self_loops_dropped;
            continue;
        }
        raw.push_back({std::min(a, b), std::max(a, b)});
    }

    std::sort(raw.begin(), raw.end());
    auto last = std::unique(raw.begin(), raw.end());
    result.duplicate_edges_dropped = static_cast<std::size_t>(raw.end() - last);
    raw.erase(last, raw.end());

    const VertexId n = static_cast<VertexId>(labels.size());
    result.graph = Graph::from_edges(n, std::move(raw), std::move(labels));
    return result;
}

LoadResult load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (const Edge& e : g.edges()) out << g.label(e.v) << ' ' << g.label(e.u) << '\n';
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) out << g.label(v) << ' ' << g.label(v) << '\n';
}

}  // namespace hamuhi
