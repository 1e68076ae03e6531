#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hamuhi {

using VertexId = std::uint32_t;

// Canonical undirected edge, always stored with v < u.
struct Edge {
    VertexId v;
    VertexId u;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Immutable undirected simple graph in compressed adjacency form.
///
/// Vertices are numbered 0..vertex_count()-1. Neighbor lists are strictly
/// increasing, the edge array holds each edge once as (v, u) with v < u,
/// sorted lexicographically; all per-edge tables index into that array.
/// Safe for concurrent reads once constructed.
class Graph {
public:
    Graph() = default;

    // Normalizes orientation, sorts and deduplicates `edges`. Self-loops are
    // rejected; loaders must filter them beforehand. Empty `labels` defaults
    // to "0".."n-1".
    static Graph from_edges(VertexId vertex_count, std::vector<Edge> edges,
                            std::vector<std::string> labels = {});

    VertexId vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Sorted open neighborhood of v (v itself excluded).
    std::span<const VertexId> neighbors(VertexId v) const;

    VertexId degree(VertexId v) const;

    bool has_edge(VertexId v, VertexId u) const;

    const std::vector<Edge>& edges() const { return edges_; }

    /// Original input identifier of v.
    const std::string& label(VertexId v) const;
    const std::vector<std::string>& labels() const { return labels_; }

private:
    void check_vertex(VertexId v) const;

    VertexId vertex_count_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<VertexId> adjacency_;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
};

struct LoadResult {
    Graph graph;
    std::size_t self_loops_dropped = 0;
    std::size_t duplicate_edges_dropped = 0;
    std::size_t extra_column_lines = 0;
};

/// Parses whitespace-separated edge-list text.
///
/// Lines starting with '#' or '%' are comments, blank lines are skipped.
/// Each remaining line carries two vertex ids (arbitrary strings); a third
/// column is tolerated and counted, any other shape is a ParseError with the
/// line number. Ids are compacted to 0..n-1 in first-appearance order;
/// self-loops and duplicate edges (either orientation) are dropped and
/// counted. Empty input yields the empty graph.
LoadResult load_edge_list(std::istream& in);
LoadResult load_edge_list_file(const std::string& path);

/// Writes one "label label" line per canonical edge. Degree-0 vertices are
/// emitted as self-loops so reloading preserves the vertex set.
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace hamuhi
