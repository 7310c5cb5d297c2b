#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sesqui/graph.hpp"

namespace sesqui {

/// embedding[u] is the host vertex that pattern vertex u maps to.
using Embedding = std::vector<Vertex>;

/// Exact search for an injective map from `pattern` into `host` that
/// preserves both adjacency and non-adjacency. Backtracking picks the
/// pattern vertex with the fewest consistent host candidates at each level
/// and tries candidates in ascending index, so the witness is deterministic.
std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern);

/// Same, additionally requiring host_colors[embedding[u]] == pattern_colors[u].
std::optional<Embedding> find_induced(const Graph& host, std::span<const int> host_colors,
                                      const Graph& pattern, std::span<const int> pattern_colors);

inline bool contains_induced(const Graph& host, const Graph& pattern) {
    return find_induced(host, pattern).has_value();
}

}  // namespace sesqui
