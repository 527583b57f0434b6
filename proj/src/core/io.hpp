#pragma once

#include "core/geometry.hpp"
#include "core/graph.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rhgen::io {

enum class EdgeFormat {
    EdgeList, // "u v" per line
    Csv,      // "u,v" header, then "u,v" per line
};

/// Writes edges with u < v, 0-based ids. `canonical` sorts lines
/// lexicographically; otherwise edges are written in the given order.
void write_edge_list(const std::string& path, std::span<const Edge> edges, EdgeFormat format = EdgeFormat::EdgeList,
                     bool canonical = false);

/// Reads either format back (the format is detected from the content).
/// Lines starting with '#' and blank lines are ignored.
std::vector<Edge> read_edge_list(const std::string& path);

/// "id phi r" per line, 17 significant digits.
void write_coordinates(const std::string& path, std::span<const PolarPoint> coords);

std::vector<PolarPoint> read_coordinates(const std::string& path);

} // namespace rhgen::io
