#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "avgindep/graph.hpp"

namespace avgindep {

/// Edge-list text: an optional first line "n <count>", then one "u v" pair
/// per line (0-indexed). Blank lines and lines starting with '#' are
/// skipped. Without a header the order is 1 + the largest endpoint.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
Graph load_edge_list(const std::filesystem::path& path);

/// Writes the "n <count>" header followed by one edge per line.
std::string format_edge_list(const Graph& g);

/// "path:N", "star:N", "complete:N", "empty:N" or "file:PATH".
Graph parse_graph_spec(std::string_view spec);

}  // namespace avgindep
