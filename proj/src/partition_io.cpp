#include "hamuhi/partition_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace hamuhi {

Partition read_partition_tsv(const Graph& g, std::istream& in) {
    std::unordered_map<std::string, VertexId> vertex_of;
    vertex_of.reserve(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) vertex_of.emplace(g.label(v), v);

    std::vector<std::uint32_t> raw(g.vertex_count());
    std::vector<bool> seen(g.vertex_count(), false);
    std::unordered_map<std::string, std::uint32_t> community_of;
    std::size_t assigned = 0;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string vertex_token, community_token, extra;
        if (!(fields >> vertex_token)) continue;
        if (vertex_token.front() == '#' || vertex_token.front() == '%') continue;
        if (!(fields >> community_token) || (fields >> extra))
            throw ParseError(line_no, "expected 'vertex community'");

        auto it = vertex_of.find(vertex_token);
        if (it == vertex_of.end())
            throw std::runtime_error("partition mentions unknown vertex '" + vertex_token + "'");
        if (seen[it->second])
            throw std::runtime_error("vertex '" + vertex_token + "' assigned twice");
        seen[it->second] = true;
        ++assigned;

        auto [cit, inserted] = community_of.try_emplace(
            community_token, static_cast<std::uint32_t>(community_of.size()));
        raw[it->second] = cit->second;
    }
    if (assigned != g.vertex_count())
        throw std::runtime_error("partition covers " + std::to_string(assigned) + " of " +
                                 std::to_string(g.vertex_count()) + " vertices");
    return Partition(raw);
}

Partition read_partition_tsv_file(const Graph& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_partition_tsv(g, in);
}

void write_partition_tsv(const Graph& g, const Partition& p, std::ostream& out) {
    if (p.vertex_count() != g.vertex_count())
        throw std::invalid_argument("write_partition_tsv: partition does not cover graph");
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        out << g.label(v) << '\t' << p.community_of(v) << '\n';
}

}  // namespace hamuhi
