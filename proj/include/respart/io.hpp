#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "respart/bounds.hpp"
#include "respart/graph.hpp"
#include "respart/lab.hpp"
#include "respart/resolver.hpp"

namespace respart::io {

// Graph files: one "u v" edge per line, ids 0-based, '#' comments, optional
// leading header "n <count>" (needed when isolated vertices matter). A file
// whose first token is "K" is a build recipe instead: "K <size>" then
// "K <size> @ <attach>" lines, glued at single vertices.
//
// Partition files: one class per line, space-separated vertex ids; line order
// is the class order.

Graph read_graph(std::istream& in, const std::string& name);
Graph read_graph_file(const std::string& path);

VertexPartition read_partition(std::istream& in, const std::string& name);
VertexPartition read_partition_file(const std::string& path);

std::string partition_text(const VertexPartition& pi);
void write_partition_file(const std::string& path, const VertexPartition& pi);

/// Undirected DOT; with a partition, classes are colored by index.
std::string to_dot(const Graph& g, const VertexPartition* pi = nullptr);

nlohmann::json partition_json(const VertexPartition& pi);
nlohmann::json report_json(const Graph& g, const BoundsReport& report);

}  // namespace respart::io
