#pragma once

#include "sqroot/graph.hpp"

#include <string>
#include <vector>

namespace sqroot {

/// Ordered bag sequence. Valid for a graph g when the bags cover every
/// vertex, every edge lies inside some bag, and each vertex occupies a
/// contiguous run of bags.
struct PathDecomposition {
    std::vector<std::vector<int>> bags;  // each sorted ascending

    int width() const;

    /// One line per bag: space-separated vertex ids.
    std::string to_text() const;
    static PathDecomposition from_text(const std::string& text);
};

bool validate_path_decomposition(const Graph& g, const PathDecomposition& pd);

/// Bags X_i = L_i ∪ L_{i+1} ∪ L_{i+2} over the BFS layering of h from
/// `source` — a path decomposition of square(h) (asserted against it).
/// Throws when h is disconnected.
PathDecomposition bfs_triple_decomposition(const Graph& h, int source);

}  // namespace sqroot
