#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "hamuhi/detection.hpp"
#include "hamuhi/graph.hpp"

namespace hamuhi {

/// Newman-Girvan modularity: Q = sum_c [ e_c/M - (d_c/2M)^2 ] with e_c the
/// internal edge count, d_c the total degree of community c, M the edge
/// count. Throws std::domain_error on an edgeless graph.
double modularity(const Graph& g, const Partition& p);

/// Normalized mutual information of two partitions of the same vertex set,
/// in [0,1]: 0 for independent labelings, 1 for equal ones. Normalized by
/// the arithmetic mean of the label entropies (natural log, 0*log 0 = 0);
/// two trivial single-community partitions count as equal.
double nmi(const Partition& a, const Partition& b);

/// Histogram community size -> number of communities of that size.
std::map<std::uint32_t, std::uint32_t> size_distribution(const Partition& p);

/// Two-column TSV "size<TAB>count", ascending sizes.
void write_size_histogram_tsv(const std::map<std::uint32_t, std::uint32_t>& histogram,
                              std::ostream& out);

/// Metrics bundle for one detection run.
struct RunReport {
    std::uint32_t community_count = 0;
    double modularity = 0.0;
    std::optional<double> nmi;
    std::map<std::uint32_t, std::uint32_t> size_histogram;
    int detection_iterations = 0;
    int sizing_iterations = 0;
    double wall_time_seconds = 0.0;
};

/// JSON text for a report; `nmi_normalization` records the variant in use.
std::string to_json_string(const RunReport& report, int indent = 2);

}  // namespace hamuhi
