#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hamuhi/detection.hpp"
#include "hamuhi/graph.hpp"

namespace hamuhi {

/// Deterministic 64-bit generator (splitmix64). The stream is fully defined
/// by its recurrence so any implementation reproduces identical graphs from
/// a seed:
///   state += 0x9E3779B97F4A7C15
///   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   output = z ^ (z >> 31)
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0,1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Unbiased uniform in [0, bound) via rejection.
    std::uint64_t next_below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

/// Generated benchmark graph plus its ground truth, when one is defined.
/// two_level_hierarchical fills two truths (cliques, then groups).
struct LabeledGraph {
    Graph graph;
    std::vector<Partition> truths;
    std::string meta;
};

/// N identical cliques of size m in a ring, adjacent cliques joined by one
/// edge from the last vertex of clique i to the first vertex of clique i+1.
/// Truth: one community per clique.
LabeledGraph ring_of_cliques(std::uint32_t n_cliques, std::uint32_t clique_size);

/// G(n,p) sample; every pair independently connected with probability p.
LabeledGraph erdos_renyi(std::uint32_t n, double p, std::uint64_t seed);

/// Preferential-attachment growth from a complete m-vertex core; each new
/// vertex attaches to m distinct existing vertices with probability
/// proportional to current degree.
LabeledGraph barabasi_albert(std::uint32_t n, std::uint32_t m, std::uint64_t seed);

/// Two-level clique hierarchy: within each group the cliques form a ring
/// with two anchor edges per link (dense coupling), the groups form a ring
/// joined by single edges (sparse coupling). Truths: level 1 = cliques,
/// level 2 = groups.
LabeledGraph two_level_hierarchical(std::uint32_t groups, std::uint32_t cliques_per_group,
                                    std::uint32_t clique_size);

/// "vertex<TAB>community" lines, vertices ascending.
void write_truth_tsv(const Graph& g, const Partition& truth, std::ostream& out);

}  // namespace hamuhi
