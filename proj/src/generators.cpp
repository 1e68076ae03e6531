#include "hamuhi/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace hamuhi {

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("SplitMix64: bound must be positive");
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t value;
    do {
        value = next();
    } while (value >= limit);
    return value % bound;
}

namespace {

void add_clique(std::vector<Edge>& edges, VertexId first, std::uint32_t size) {
    for (VertexId a = first; a < first + size; ++a)
        for (VertexId b = a + 1; b < first + size; ++b) edges.push_back({a, b});
}

Partition blocks_of(std::uint32_t block_count, std::uint32_t block_size) {
    std::vector<std::uint32_t> labels(static_cast<std::size_t>(block_count) * block_size);
    for (std::size_t v = 0; v < labels.size(); ++v)
        labels[v] = static_cast<std::uint32_t>(v / block_size);
    return Partition(labels);
}

}  // namespace

LabeledGraph ring_of_cliques(std::uint32_t n_cliques, std::uint32_t clique_size) {
    if (n_cliques < 3) throw std::invalid_argument("ring_of_cliques: need at least 3 cliques");
    if (clique_size < 3) throw std::invalid_argument("ring_of_cliques: clique size must be >= 3");

    const VertexId n = n_cliques * clique_size;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n_cliques) *
                  (clique_size * (clique_size - 1) / 2 + 1));
    for (std::uint32_t i = 0; i < n_cliques; ++i) {
        VertexId first = i * clique_size;
        add_clique(edges, first, clique_size);
        VertexId bridge_from = first + clique_size - 1;
        VertexId bridge_to = ((i + 1) % n_cliques) * clique_size;
        edges.push_back({std::min(bridge_from, bridge_to), std::max(bridge_from, bridge_to)});
    }

    LabeledGraph out;
    out.graph = Graph::from_edges(n, std::move(edges));
    out.truths.push_back(blocks_of(n_cliques, clique_size));
    out.meta = "ring_of_cliques(" + std::to_string(n_cliques) + "," +
               std::to_string(clique_size) + ")";
    return out;
}

LabeledGraph erdos_renyi(std::uint32_t n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("erdos_renyi: p must be in [0,1]");

    std::vector<Edge> edges;
    if (p >= 1.0) {
        for (VertexId v = 0; v < n; ++v)
            for (VertexId u = v + 1; u < n; ++u) edges.push_back({v, u});
    } else if (p > 0.0 && n > 1) {
        // Geometric skipping over the linearized lower triangle; expected
        // work is proportional to the number of generated edges.
        SplitMix64 rng(seed);
        const double log_q = std::log1p(-p);
        std::int64_t v = 1;
        std::int64_t w = -1;
        while (v < static_cast<std::int64_t>(n)) {
            double r = rng.next_double();
            w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
            while (w >= v && v < static_cast<std::int64_t>(n)) {
                w -= v;
                ++v;
            }
            if (v < static_cast<std::int64_t>(n))
                edges.push_back({static_cast<VertexId>(w), static_cast<VertexId>(v)});
        }
    }

    LabeledGraph out;
    out.graph = Graph::from_edges(n, std::move(edges));
    out.meta = "erdos_renyi(" + std::to_string(n) + ",p," + std::to_string(seed) + ")";
    return out;
}

LabeledGraph barabasi_albert(std::uint32_t n, std::uint32_t m, std::uint64_t seed) {
    if (m < 1 || m >= n) throw std::invalid_argument("barabasi_albert: need 1 <= m < n");

    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m) * (m - 1) / 2 +
                  static_cast<std::size_t>(n - m) * m);
    add_clique(edges, 0, m);

    // One endpoint entry per degree unit; uniform draws from it realize
    // degree-proportional attachment.
    std::vector<VertexId> chances;
    chances.reserve(2 * edges.capacity());
    for (const Edge& e : edges) {
        chances.push_back(e.v);
        chances.push_back(e.u);
    }

    std::vector<VertexId> picked;
    picked.reserve(m);
    for (VertexId t = m; t < n; ++t) {
        picked.clear();
        while (picked.size() < m) {
            VertexId candidate = chances.empty()
                                     ? static_cast<VertexId>(rng.next_below(t))
                                     : chances[rng.next_below(chances.size())];
            if (std::find(picked.begin(), picked.end(), candidate) != picked.end()) continue;
            picked.push_back(candidate);
        }
        for (VertexId target : picked) {
            edges.push_back({target, t});
            chances.push_back(target);
            chances.push_back(t);
        }
    }

    LabeledGraph out;
    out.graph = Graph::from_edges(n, std::move(edges));
    out.meta = "barabasi_albert(" + std::to_string(n) + "," + std::to_string(m) + "," +
               std::to_string(seed) + ")";
    return out;
}

LabeledGraph two_level_hierarchical(std::uint32_t groups, std::uint32_t cliques_per_group,
                                    std::uint32_t clique_size) {
    if (groups < 2 || cliques_per_group < 2)
        throw std::invalid_argument("two_level_hierarchical: counts must be >= 2");
    if (clique_size < 3)
        throw std::invalid_argument("two_level_hierarchical: clique size must be >= 3");

    const std::uint32_t group_span = cliques_per_group * clique_size;
    const VertexId n = groups * group_span;
    std::vector<Edge> edges;

    for (std::uint32_t j = 0; j < groups; ++j) {
        const VertexId base = j * group_span;
        for (std::uint32_t i = 0; i < cliques_per_group; ++i) {
            const VertexId first = base + i * clique_size;
            add_clique(edges, first, clique_size);
            // Two anchor edges into the next clique of the same group keep
            // intra-group links structurally similar (shared neighbor) while
            // the single group-to-group edges below stay at similarity zero.
            const VertexId last = first + clique_size - 1;
            const VertexId next_first = base + ((i + 1) % cliques_per_group) * clique_size;
            edges.push_back({std::min(last, next_first), std::max(last, next_first)});
            edges.push_back({std::min(last, static_cast<VertexId>(next_first + 1)),
                             std::max(last, static_cast<VertexId>(next_first + 1))});
        }
        const VertexId group_last = base + group_span - 1;
        const VertexId next_group_first = ((j + 1) % groups) * group_span;
        edges.push_back({std::min(group_last, next_group_first),
                         std::max(group_last, next_group_first)});
    }

    LabeledGraph out;
    out.graph = Graph::from_edges(n, std::move(edges));
    out.truths.push_back(blocks_of(groups * cliques_per_group, clique_size));
    out.truths.push_back(blocks_of(groups, group_span));
    out.meta = "two_level_hierarchical(" + std::to_string(groups) + "," +
               std::to_string(cliques_per_group) + "," + std::to_string(clique_size) + ")";
    return out;
}

void write_truth_tsv(const Graph& g, const Partition& truth, std::ostream& out) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        out << g.label(v) << '\t' << truth.community_of(v) << '\n';
}

}  // namespace hamuhi
