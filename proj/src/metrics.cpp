#include "hamuhi/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <unordered_map>

#include "json.hpp"

namespace hamuhi {

double modularity(const Graph& g, const Partition& p) {
    if (p.vertex_count() != g.vertex_count())
        throw std::invalid_argument("modularity: partition does not cover graph");
    if (g.edge_count() == 0) throw std::domain_error("modularity: undefined on edgeless graph");

    const double m = static_cast<double>(g.edge_count());
    std::vector<double> internal(p.community_count(), 0.0);
    std::vector<double> total_degree(p.community_count(), 0.0);
    for (const Edge& e : g.edges())
        if (p.community_of(e.v) == p.community_of(e.u)) internal[p.community_of(e.v)] += 1.0;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        total_degree[p.community_of(v)] += static_cast<double>(g.degree(v));

    double q = 0.0;
    for (std::uint32_t c = 0; c < p.community_count(); ++c) {
        double share = total_degree[c] / (2.0 * m);
        q += internal[c] / m - share * share;
    }
    return q;
}

double nmi(const Partition& a, const Partition& b) {
    if (a.vertex_count() != b.vertex_count())
        throw std::invalid_argument("nmi: partitions cover different vertex sets");
    const double n = static_cast<double>(a.vertex_count());
    if (n == 0.0) return 1.0;
    if (a.assignment() == b.assignment()) return 1.0;

    std::unordered_map<std::uint64_t, double> joint;
    for (VertexId v = 0; v < a.vertex_count(); ++v) {
        std::uint64_t key =
            (static_cast<std::uint64_t>(a.community_of(v)) << 32) | b.community_of(v);
        joint[key] += 1.0;
    }

    auto entropy = [n](const Partition& p) {
        double h = 0.0;
        for (const auto& members : p.communities()) {
            double share = static_cast<double>(members.size()) / n;
            h -= share * std::log(share);
        }
        return h;
    };
    double ha = entropy(a);
    double hb = entropy(b);
    if (ha == 0.0 && hb == 0.0) return 1.0;  // both trivial, equal up to labels
    if (ha == 0.0 || hb == 0.0) return 0.0;  // one label carries no information

    double info = 0.0;
    for (const auto& [key, count] : joint) {
        double pa = static_cast<double>(a.size_of(static_cast<std::uint32_t>(key >> 32))) / n;
        double pb = static_cast<double>(b.size_of(static_cast<std::uint32_t>(key & 0xffffffffu))) / n;
        double pj = count / n;
        info += pj * std::log(pj / (pa * pb));
    }
    return std::clamp(2.0 * info / (ha + hb), 0.0, 1.0);
}

std::map<std::uint32_t, std::uint32_t> size_distribution(const Partition& p) {
    std::map<std::uint32_t, std::uint32_t> histogram;
    for (const auto& members : p.communities())
        ++histogram[static_cast<std::uint32_t>(members.size())];
    return histogram;
}

void write_size_histogram_tsv(const std::map<std::uint32_t, std::uint32_t>& histogram,
                              std::ostream& out) {
    for (const auto& [size, count] : histogram) out << size << '\t' << count << '\n';
}

std::string to_json_string(const RunReport& report, int indent) {
    nlohmann::json j;
    j["community_count"] = report.community_count;
    j["modularity"] = report.modularity;
    if (report.nmi)
        j["nmi"] = *report.nmi;
    else
        j["nmi"] = nullptr;
    j["nmi_normalization"] = "arithmetic-mean";
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [size, count] : report.size_histogram) hist[std::to_string(size)] = count;
    j["size_histogram"] = hist;
    j["iterations"]["detection"] = report.detection_iterations;
    j["iterations"]["sizing"] = report.sizing_iterations;
    j["wall_time_seconds"] = report.wall_time_seconds;
    return j.dump(indent);
}

}  // namespace hamuhi
