#pragma once

#include <iosfwd>
#include <string>

#include "hamuhi/detection.hpp"
#include "hamuhi/graph.hpp"

namespace hamuhi {

/// Reads "vertex<TAB>community" lines (any whitespace separates the two
/// columns, '#'/'%' lines are comments). Vertex tokens are matched against
/// the graph's labels and every vertex must appear exactly once; community
/// tokens may be arbitrary strings and are renumbered densely.
Partition read_partition_tsv(const Graph& g, std::istream& in);
Partition read_partition_tsv_file(const Graph& g, const std::string& path);

/// Writes "label<TAB>community" lines, vertices in ascending id order,
/// community ids dense from 0.
void write_partition_tsv(const Graph& g, const Partition& p, std::ostream& out);

}  // namespace hamuhi
