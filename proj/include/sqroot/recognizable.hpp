#pragma once

#include "sqroot/graph.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sqroot {

/// Witness that edge uv is recognizable: a partition (X, Y) of the common
/// neighbourhood N(u) ∩ N(v) into two nonempty cliques with no edges
/// between them, such that every other neighbour of u attaches to X but
/// never to Y, and every other neighbour of v attaches to Y but never to X.
struct RecognizablePartition {
    int u = 0;
    int v = 0;
    std::vector<int> x;  // sorted ascending
    std::vector<int> y;  // sorted ascending
};

/// Literal re-check of all six witness conditions against g. Independent
/// of the search path that produced the witness.
bool verify_recognizable_partition(const Graph& g, const RecognizablePartition& w);

/// Witness for edge uv, or nullopt when none exists. Among multiple valid
/// witnesses returns the one with lexicographically least X (compared as
/// sorted vertex lists). Throws when uv is not an edge of g.
///
/// The common neighbourhood splits along connected components of the
/// induced subgraph: any valid side is a union of whole components, so the
/// search enumerates component-to-side assignments instead of raw vertex
/// partitions, and bails out early when some component is not a clique.
std::optional<RecognizablePartition> recognizable_partition(const Graph& g, int u, int v);

/// First recognizable edge in canonical edge order, with its witness.
std::optional<std::pair<Edge, RecognizablePartition>> find_recognizable_edge(const Graph& g);

/// All recognizable edges in canonical order.
std::vector<std::pair<Edge, RecognizablePartition>> find_all_recognizable_edges(const Graph& g);

/// "edge u v | X = {..} | Y = {..}"
std::string to_string(const RecognizablePartition& w);

}  // namespace sqroot
