#pragma once

#include <cstdint>
#include <vector>

#include "hamuhi/disjoint_set.hpp"
#include "hamuhi/graph.hpp"
#include "hamuhi/similarity.hpp"

namespace hamuhi {

enum class CommunityDefinition { kWeak, kWeakest };

const char* to_string(CommunityDefinition def);

struct MergePhaseStats {
    int iterations = 0;
    std::uint64_t merges = 0;
};

/// Finalized vertex -> community labeling. Labels are densely renumbered
/// 0..k-1 in order of first appearance over ascending vertex ids; member
/// lists are sorted.
class Partition {
public:
    Partition() = default;

    /// Renumbers arbitrary labels densely.
    explicit Partition(const std::vector<std::uint32_t>& raw_labels);

    /// Labels every vertex with its current representative, then renumbers.
    static Partition from_state(DisjointSet& state);

    VertexId vertex_count() const { return static_cast<VertexId>(assignment_.size()); }
    std::uint32_t community_count() const {
        return static_cast<std::uint32_t>(communities_.size());
    }
    std::uint32_t community_of(VertexId v) const;
    const std::vector<std::uint32_t>& assignment() const { return assignment_; }
    const std::vector<std::vector<VertexId>>& communities() const { return communities_; }
    std::uint32_t size_of(std::uint32_t community) const;
    std::uint32_t min_community_size() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<std::uint32_t> assignment_;
    std::vector<std::vector<VertexId>> communities_;
};

/// Merges singleton communities until every community satisfies `def`.
///
/// Per iteration: one pass over the canonical edge array accumulates the
/// definition balance and the best-partner pair (W,R) per community under
/// strict >, then one pass over community ids 0..n-1 merges every failing
/// community into its most similar adjacent community. Repeats while any
/// merge happened. The similarity table is never recomputed.
DisjointSet community_detection(const Graph& g, const EdgeSimilarityTable& sims,
                                CommunityDefinition def, MergePhaseStats* stats = nullptr);

/// Grows communities in place until each either reaches `min_size` or spans
/// a whole connected component. Same iteration shape as community_detection
/// with the size test replacing the definition test.
MergePhaseStats hierarchical_level(const Graph& g, const EdgeSimilarityTable& sims,
                                   DisjointSet& state, std::uint32_t min_size);

struct HamuhiStats {
    MergePhaseStats detection;
    MergePhaseStats sizing;
};

/// End-to-end HAMUHI run: similarities once, definition-driven merging, then
/// the size-driven level. Deterministic given the canonical edge order.
/// Defaults follow the recommended (k=2, weakest) parameterization.
Partition detect_communities(const Graph& g, std::uint32_t min_size = 2,
                             CommunityDefinition def = CommunityDefinition::kWeakest,
                             SimilarityVariant variant = SimilarityVariant::kModified,
                             HamuhiStats* stats = nullptr);

/// Multi-level detection: level 1 is detect_communities(g, first_min_size, def); each
/// further level reruns the size-driven merge with the minimum size set to
/// one above the previous level's smallest community. Stops early when a
/// level no longer changes the structure.
std::vector<Partition> run_hierarchy(const Graph& g, CommunityDefinition def, int max_levels,
                                     SimilarityVariant variant = SimilarityVariant::kModified,
                                     std::uint32_t first_min_size = 2,
                                     std::vector<HamuhiStats>* stats = nullptr);

/// Re-derives the definition test for one community straight from the graph
/// and partition, independent of any algorithm scratch state.
/// Weak: sum of internal degrees >= sum of external degrees.
/// Weakest: sum of internal degrees >= max external edge count toward any
/// single other community.
bool check_definition(const Graph& g, const Partition& p, std::uint32_t community,
                      CommunityDefinition def);

}  // namespace hamuhi
