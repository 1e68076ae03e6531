#include "hamuhi/similarity.hpp"

#include <cmath>
#include <ostream>

namespace hamuhi {

const char* to_string(SimilarityVariant variant) {
    return variant == SimilarityVariant::kModified ? "modified" : "original";
}

std::size_t common_neighbor_count(const Graph& g, VertexId v, VertexId u) {
    auto a = g.neighbors(v);
    auto b = g.neighbors(u);
    std::size_t count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (b[j] < a[i]) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

namespace {

void require_edge(const Graph& g, VertexId v, VertexId u) {
    if (!g.has_edge(v, u)) throw std::invalid_argument("similarity: (v,u) is not an edge");
}

// Neighbor lists never contain their own vertex, so the plain intersection
// already equals the common-neighbor set with both endpoints excluded.
double modified_from_common(const Graph& g, VertexId v, VertexId u, std::size_t common) {
    if (common == 0) return 0.0;
    double dv = static_cast<double>(g.degree(v)) - 1.0;
    double du = static_cast<double>(g.degree(u)) - 1.0;
    return static_cast<double>(common) / std::sqrt(dv * du);
}

// Closed structures share both endpoints, hence the +2 and +1 shifts.
double original_from_common(const Graph& g, VertexId v, VertexId u, std::size_t common) {
    double dv = static_cast<double>(g.degree(v)) + 1.0;
    double du = static_cast<double>(g.degree(u)) + 1.0;
    return (static_cast<double>(common) + 2.0) / std::sqrt(dv * du);
}

}  // namespace

double modified_similarity(const Graph& g, VertexId v, VertexId u) {
    require_edge(g, v, u);
    return modified_from_common(g, v, u, common_neighbor_count(g, v, u));
}

double original_similarity(const Graph& g, VertexId v, VertexId u) {
    require_edge(g, v, u);
    return original_from_common(g, v, u, common_neighbor_count(g, v, u));
}

EdgeSimilarityTable compute_similarities(const Graph& g, SimilarityVariant variant) {
    std::vector<double> values(g.edge_count());
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        std::size_t common = common_neighbor_count(g, edges[i].v, edges[i].u);
        values[i] = variant == SimilarityVariant::kModified
                        ? modified_from_common(g, edges[i].v, edges[i].u, common)
                        : original_from_common(g, edges[i].v, edges[i].u, common);
    }
    return {variant, std::move(values)};
}

void write_similarity_tsv(const Graph& g, const EdgeSimilarityTable& sims, std::ostream& out) {
    char buf[32];
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        std::snprintf(buf, sizeof buf, "%.6f", sims[i]);
        out << g.label(g.edges()[i].v) << '\t' << g.label(g.edges()[i].u) << '\t' << buf << '\n';
    }
}

}  // namespace hamuhi
