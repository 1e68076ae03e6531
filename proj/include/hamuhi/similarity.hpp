#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "hamuhi/graph.hpp"

namespace hamuhi {

enum class SimilarityVariant { kModified, kOriginal };

const char* to_string(SimilarityVariant variant);

/// Per-edge structural similarity values aligned with Graph::edges().
/// Computed once per run and never mutated afterwards.
class EdgeSimilarityTable {
public:
    EdgeSimilarityTable() = default;
    EdgeSimilarityTable(SimilarityVariant variant, std::vector<double> values)
        : variant_(variant), values_(std::move(values)) {}

    double operator[](std::size_t edge_index) const { return values_[edge_index]; }
    std::size_t size() const { return values_.size(); }
    SimilarityVariant variant() const { return variant_; }
    const std::vector<double>& values() const { return values_; }

private:
    SimilarityVariant variant_ = SimilarityVariant::kModified;
    std::vector<double> values_;
};

/// Number of shared neighbors of v and u (two-pointer merge of sorted lists).
std::size_t common_neighbor_count(const Graph& g, VertexId v, VertexId u);

/// Similarity of the open neighbor structures of an adjacent pair:
/// |common neighbors| / sqrt((deg(v)-1) * (deg(u)-1)), with the value
/// defined as 0 when the pair shares no neighbor (which covers degree-1
/// endpoints). Throws std::invalid_argument when (v,u) is not an edge.
double modified_similarity(const Graph& g, VertexId v, VertexId u);

/// Classical cosine similarity over closed neighborhoods; strictly positive
/// for adjacent vertices since each endpoint belongs to both structures.
double original_similarity(const Graph& g, VertexId v, VertexId u);

/// Pure over the immutable graph; entries land in disjoint slots, so the
/// per-edge loop may be partitioned across workers without changing results.
EdgeSimilarityTable compute_similarities(const Graph& g, SimilarityVariant variant);

/// Debug dump: "v<TAB>u<TAB>sigma" with 6 decimals, canonical edge order.
void write_similarity_tsv(const Graph& g, const EdgeSimilarityTable& sims, std::ostream& out);

}  // namespace hamuhi
