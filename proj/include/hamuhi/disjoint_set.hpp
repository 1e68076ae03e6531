#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hamuhi/graph.hpp"

namespace hamuhi {

/// Union-find over vertex ids with union by size and path compression.
///
/// Community ids handed to other modules are always current representatives
/// in 0..n-1, so per-community scratch arrays of length n stay valid.
/// Single-writer: find() compresses paths and must not race.
class DisjointSet {
public:
    explicit DisjointSet(VertexId n) : parent_(n), size_(n, 1), set_count_(n) {
        std::iota(parent_.begin(), parent_.end(), VertexId{0});
    }

    VertexId element_count() const { return static_cast<VertexId>(parent_.size()); }
    VertexId set_count() const { return set_count_; }

    VertexId find(VertexId v) {
        check(v);
        VertexId root = v;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[v] != root) {
            VertexId next = parent_[v];
            parent_[v] = root;
            v = next;
        }
        return root;
    }

    /// Merges the sets of a and b; no-op when they already share a root.
    /// The larger set keeps its representative, equal sizes keep the smaller
    /// root id. Returns the surviving representative.
    VertexId unite(VertexId a, VertexId b) {
        VertexId ra = find(a);
        VertexId rb = find(b);
        if (ra == rb) return ra;
        if (size_[ra] < size_[rb] || (size_[ra] == size_[rb] && rb < ra)) std::swap(ra, rb);
        parent_[rb] = ra;
        size_[ra] += size_[rb];
        --set_count_;
        return ra;
    }

    VertexId size_of(VertexId v) { return size_[find(v)]; }

private:
    void check(VertexId v) const {
        if (v >= parent_.size()) throw std::out_of_range("DisjointSet: element out of range");
    }

    std::vector<VertexId> parent_;
    std::vector<VertexId> size_;
    VertexId set_count_;
};

}  // namespace hamuhi
