#include "hamuhi/detection.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <unordered_map>

namespace hamuhi {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

std::uint64_t pair_key(VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

const char* to_string(CommunityDefinition def) {
    return def == CommunityDefinition::kWeak ? "weak" : "weakest";
}

Partition::Partition(const std::vector<std::uint32_t>& raw_labels) {
    assignment_.resize(raw_labels.size());
    std::unordered_map<std::uint32_t, std::uint32_t> dense;
    dense.reserve(raw_labels.size());
    for (std::size_t v = 0; v < raw_labels.size(); ++v) {
        auto [it, inserted] =
            dense.try_emplace(raw_labels[v], static_cast<std::uint32_t>(communities_.size()));
        if (inserted) communities_.emplace_back();
        assignment_[v] = it->second;
        communities_[it->second].push_back(static_cast<VertexId>(v));
    }
    // Members arrive in ascending vertex order, so lists are already sorted.
}

Partition Partition::from_state(DisjointSet& state) {
    std::vector<std::uint32_t> labels(state.element_count());
    for (VertexId v = 0; v < state.element_count(); ++v) labels[v] = state.find(v);
    return Partition(labels);
}

std::uint32_t Partition::community_of(VertexId v) const {
    if (v >= assignment_.size()) throw std::out_of_range("Partition: vertex out of range");
    return assignment_[v];
}

std::uint32_t Partition::size_of(std::uint32_t community) const {
    if (community >= communities_.size())
        throw std::invalid_argument("Partition: invalid community label");
    return static_cast<std::uint32_t>(communities_[community].size());
}

std::uint32_t Partition::min_community_size() const {
    std::uint32_t best = 0;
    for (const auto& members : communities_)
        if (best == 0 || members.size() < best) best = static_cast<std::uint32_t>(members.size());
    return best;
}

namespace {

// Shared per-iteration scan state. W holds the best similarity seen per
// community, R the community on the other side of that edge; both are
// indexed by scan-time representatives and stay valid through the merge
// pass even when a representative is absorbed mid-pass.
struct BestPartner {
    std::vector<double> weight;
    std::vector<std::uint32_t> target;

    explicit BestPartner(VertexId n) : weight(n), target(n) {}

    void reset() {
        std::fill(weight.begin(), weight.end(), -1.0);
        std::fill(target.begin(), target.end(), kNone);
    }

    void offer(std::uint32_t community, std::uint32_t other, double sim) {
        if (sim > weight[community]) {
            weight[community] = sim;
            target[community] = other;
        }
    }
};

// Merge pass shared by all three heuristics: every community failing its
// test is merged into the recorded best partner. Stale targets are chased
// with live find() lookups, so chains can collapse several communities in
// one pass; a no-op union does not count as progress.
template <typename Fails>
std::uint64_t merge_failing(DisjointSet& state, const BestPartner& best, Fails&& fails) {
    std::uint64_t merges = 0;
    for (VertexId c = 0; c < state.element_count(); ++c) {
        if (best.target[c] == kNone || !fails(c)) continue;
        VertexId a = state.find(c);
        VertexId b = state.find(best.target[c]);
        if (a == b) continue;
        state.unite(a, b);
        ++merges;
    }
    return merges;
}

}  // namespace

DisjointSet community_detection(const Graph& g, const EdgeSimilarityTable& sims,
                                CommunityDefinition def, MergePhaseStats* stats) {
    if (sims.size() != g.edge_count())
        throw std::invalid_argument("community_detection: similarity table misaligned");

    const VertexId n = g.vertex_count();
    DisjointSet state(n);
    const auto& edges = g.edges();

    BestPartner best(n);
    std::vector<std::int64_t> balance(n);
    std::vector<std::int64_t> max_external(n);
    std::unordered_map<std::uint64_t, std::int64_t> pair_edges;
    if (def == CommunityDefinition::kWeakest) pair_edges.reserve(g.edge_count());

    MergePhaseStats local;
    bool progressed = true;
    while (progressed) {
        progressed = false;
        ++local.iterations;
        best.reset();
        std::fill(balance.begin(), balance.end(), 0);

        if (def == CommunityDefinition::kWeak) {
            // balance[c] accumulates internal minus external degree.
            for (std::size_t i = 0; i < edges.size(); ++i) {
                VertexId cv = state.find(edges[i].v);
                VertexId cu = state.find(edges[i].u);
                if (cv != cu) {
                    --balance[cu];
                    --balance[cv];
                    best.offer(cu, cv, sims[i]);
                    best.offer(cv, cu, sims[i]);
                } else {
                    balance[cu] += 2;
                }
            }
            std::uint64_t merges =
                merge_failing(state, best, [&](VertexId c) { return balance[c] < 0; });
            local.merges += merges;
            progressed = merges > 0;
        } else {
            // balance[c] accumulates the internal degree sum; max_external[c]
            // the largest per-neighbor-community edge count. Pair counts are
            // rebuilt every iteration, stale counts from before a merge would
            // no longer describe any live community pair.
            std::fill(max_external.begin(), max_external.end(), 0);
            pair_edges.clear();
            for (std::size_t i = 0; i < edges.size(); ++i) {
                VertexId cv = state.find(edges[i].v);
                VertexId cu = state.find(edges[i].u);
                if (cv != cu) {
                    std::int64_t count = ++pair_edges[pair_key(cu, cv)];
                    if (count >= max_external[cu]) max_external[cu] = count;
                    if (count >= max_external[cv]) max_external[cv] = count;
                    best.offer(cu, cv, sims[i]);
                    best.offer(cv, cu, sims[i]);
                } else {
                    balance[cu] += 2;
                }
            }
            std::uint64_t merges = merge_failing(
                state, best, [&](VertexId c) { return balance[c] < max_external[c]; });
            local.merges += merges;
            progressed = merges > 0;
        }
    }

    if (stats) *stats = local;
    return state;
}

MergePhaseStats hierarchical_level(const Graph& g, const EdgeSimilarityTable& sims,
                                   DisjointSet& state, std::uint32_t min_size) {
    if (min_size < 1) throw std::invalid_argument("hierarchical_level: min_size must be >= 1");
    if (sims.size() != g.edge_count())
        throw std::invalid_argument("hierarchical_level: similarity table misaligned");
    if (state.element_count() != g.vertex_count())
        throw std::invalid_argument("hierarchical_level: state size mismatch");

    const VertexId n = g.vertex_count();
    const auto& edges = g.edges();
    BestPartner best(n);
    std::vector<std::uint32_t> snapshot_size(n);

    MergePhaseStats local;
    bool progressed = true;
    while (progressed) {
        progressed = false;
        ++local.iterations;
        best.reset();
        for (VertexId c = 0; c < n; ++c) snapshot_size[c] = state.size_of(c);

        for (std::size_t i = 0; i < edges.size(); ++i) {
            VertexId cv = state.find(edges[i].v);
            VertexId cu = state.find(edges[i].u);
            if (cv == cu) continue;
            best.offer(cu, cv, sims[i]);
            best.offer(cv, cu, sims[i]);
        }

        std::uint64_t merges = merge_failing(
            state, best, [&](VertexId c) { return snapshot_size[c] < min_size; });
        local.merges += merges;
        progressed = merges > 0;
    }
    return local;
}

Partition detect_communities(const Graph& g, std::uint32_t min_size, CommunityDefinition def,
                 SimilarityVariant variant, HamuhiStats* stats) {
    if (min_size < 1) throw std::invalid_argument("hamuhi: min_size must be >= 1");
    EdgeSimilarityTable sims = compute_similarities(g, variant);
    HamuhiStats local;
    DisjointSet state = community_detection(g, sims, def, &local.detection);
    local.sizing = hierarchical_level(g, sims, state, min_size);
    if (stats) *stats = local;
    return Partition::from_state(state);
}

std::vector<Partition> run_hierarchy(const Graph& g, CommunityDefinition def, int max_levels,
                                     SimilarityVariant variant, std::uint32_t first_min_size,
                                     std::vector<HamuhiStats>* stats) {
    if (max_levels < 1) throw std::invalid_argument("run_hierarchy: max_levels must be >= 1");

    EdgeSimilarityTable sims = compute_similarities(g, variant);
    HamuhiStats level_stats;
    DisjointSet state = community_detection(g, sims, def, &level_stats.detection);
    level_stats.sizing = hierarchical_level(g, sims, state, first_min_size);

    std::vector<Partition> levels;
    levels.push_back(Partition::from_state(state));
    if (stats) stats->push_back(level_stats);

    while (static_cast<int>(levels.size()) < max_levels && levels.back().community_count() > 0) {
        std::uint32_t next_min = levels.back().min_community_size() + 1;
        HamuhiStats next_stats;
        next_stats.sizing = hierarchical_level(g, sims, state, next_min);
        if (next_stats.sizing.merges == 0) break;
        levels.push_back(Partition::from_state(state));
        if (stats) stats->push_back(next_stats);
    }
    return levels;
}

bool check_definition(const Graph& g, const Partition& p, std::uint32_t community,
                      CommunityDefinition def) {
    if (community >= p.community_count())
        throw std::invalid_argument("check_definition: invalid community label");
    if (p.vertex_count() != g.vertex_count())
        throw std::invalid_argument("check_definition: partition does not cover graph");

    const auto& members = p.communities()[community];
    std::int64_t internal = 0;
    if (def == CommunityDefinition::kWeak) {
        std::int64_t external = 0;
        for (VertexId v : members)
            for (VertexId u : g.neighbors(v))
                (p.community_of(u) == community ? internal : external) += 1;
        return internal >= external;
    }
    std::unordered_map<std::uint32_t, std::int64_t> toward;
    for (VertexId v : members) {
        for (VertexId u : g.neighbors(v)) {
            std::uint32_t other = p.community_of(u);
            if (other == community)
                ++internal;
            else
                ++toward[other];
        }
    }
    std::int64_t worst = 0;
    for (const auto& [other, count] : toward) worst = std::max(worst, count);
    return internal >= worst;
}

}  // namespace hamuhi
