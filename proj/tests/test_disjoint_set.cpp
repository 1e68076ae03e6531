#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <map>

#include "hamuhi/disjoint_set.hpp"
#include "hamuhi/generators.hpp"

using namespace hamuhi;

TEST_CASE("singletons") {
    DisjointSet s(3);
    CHECK(s.set_count() == 3);
    CHECK(s.find(0) != s.find(1));
    CHECK(s.find(1) != s.find(2));
    for (VertexId v = 0; v < 3; ++v) {
        CHECK(s.find(v) == v);
        CHECK(s.size_of(v) == 1);
    }

    DisjointSet empty(0);
    CHECK(empty.set_count() == 0);

    DisjointSet dolphins(62);
    CHECK(dolphins.set_count() == 62);
}

TEST_CASE("union and find basics") {
    DisjointSet s(4);
    s.unite(0, 1);
    CHECK(s.find(0) == s.find(1));
    CHECK(s.size_of(0) == 2);
    CHECK(s.set_count() == 3);

    s.unite(0, 0);  // no-op
    CHECK(s.set_count() == 3);

    s.unite(1, 2);
    CHECK(s.find(2) == s.find(0));
    CHECK(s.size_of(2) == 3);
    CHECK(s.set_count() == 2);

    CHECK_THROWS_AS(s.find(4), std::out_of_range);
    CHECK_THROWS_AS(s.unite(0, 4), std::out_of_range);
}

TEST_CASE("chain of unions collapses to one set") {
    const VertexId n = 100;
    DisjointSet s(n);
    for (VertexId v = 0; v + 1 < n; ++v) s.unite(v, v + 1);
    CHECK(s.set_count() == 1);
    CHECK(s.size_of(57) == n);
}

TEST_CASE("equal-size ties keep the smaller root") {
    DisjointSet s(4);
    CHECK(s.unite(3, 1) == 1);
    CHECK(s.unite(2, 0) == 0);
    CHECK(s.unite(3, 2) == 0);  // both size 2, smaller root wins
}

TEST_CASE("larger set keeps its representative") {
    DisjointSet s(5);
    s.unite(3, 4);  // root 3
    s.unite(3, 2);  // size 3, root 3
    CHECK(s.unite(0, 3) == 3);
    CHECK(s.find(0) == 3);
}

TEST_CASE("matches a naive labeling oracle on random operation sequences") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        SplitMix64 rng(seed);
        const VertexId n = 1 + static_cast<VertexId>(rng.next_below(100));
        DisjointSet s(n);
        std::vector<VertexId> label(n);
        for (VertexId v = 0; v < n; ++v) label[v] = v;

        for (int op = 0; op < 300; ++op) {
            VertexId a = static_cast<VertexId>(rng.next_below(n));
            VertexId b = static_cast<VertexId>(rng.next_below(n));
            if (rng.next_below(2) == 0) {
                s.unite(a, b);
                VertexId from = label[b], to = label[a];
                if (from != to)
                    for (VertexId v = 0; v < n; ++v)
                        if (label[v] == from) label[v] = to;
            } else {
                CHECK((s.find(a) == s.find(b)) == (label[a] == label[b]));
            }
        }

        // Sizes and set count agree with the oracle at the end.
        std::map<VertexId, VertexId> oracle_sizes;
        for (VertexId v = 0; v < n; ++v) ++oracle_sizes[label[v]];
        CHECK(s.set_count() == oracle_sizes.size());
        VertexId total = 0;
        std::map<VertexId, VertexId> seen;
        for (VertexId v = 0; v < n; ++v) {
            CHECK(s.size_of(v) == oracle_sizes[label[v]]);
            if (seen.emplace(s.find(v), s.size_of(v)).second) total += s.size_of(v);
        }
        CHECK(total == n);
    }
}

TEST_CASE("per-operation cost stays near constant at scale") {
    // 2M mixed operations on 1M elements; a generous wall bound catches
    // accidental quadratic behavior without being timing-sensitive.
    const VertexId n = 1'000'000;
    DisjointSet s(n);
    SplitMix64 rng(99);
    auto start = std::chrono::steady_clock::now();
    for (int op = 0; op < 2'000'000; ++op) {
        VertexId a = static_cast<VertexId>(rng.next_below(n));
        VertexId b = static_cast<VertexId>(rng.next_below(n));
        if (op % 2 == 0)
            s.unite(a, b);
        else
            s.find(a);
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(secs < 2.0);
    CHECK(s.set_count() >= 1);
}

TEST_CASE("find is a fixed point after compression") {
    DisjointSet s(50);
    for (VertexId v = 0; v + 1 < 50; ++v) s.unite(v, v + 1);
    VertexId root = s.find(49);
    CHECK(s.find(root) == root);
}
