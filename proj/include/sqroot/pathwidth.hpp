#pragma once

#include "sqroot/decomposition.hpp"
#include "sqroot/graph.hpp"

#include <cstdint>
#include <optional>

namespace sqroot {

enum class Ternary {
    Yes,
    No,
    Undecided,
};

struct PathwidthResult {
    Ternary answer = Ternary::Undecided;
    std::optional<PathDecomposition> decomposition;  // present iff Yes
    std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultPathwidthBudget = 20'000'000;

/// Exact decision pw(g) <= k via vertex-separation layout search with
/// memoization and branch-and-bound, preceded by cheap certified bounds.
/// Yes answers carry a decomposition that validates with width <= k; a "no"
/// is exact; the budget (expanded search states) turns overruns into
/// Undecided. Works per component.
PathwidthResult pathwidth_at_most(const Graph& g, int k,
                                  std::uint64_t node_budget = kDefaultPathwidthBudget);

/// Certified lower bound on pw(g): the best of greedy clique number - 1,
/// degeneracy, and greedy contraction degeneracy (max over a min-degree
/// contraction sequence of the minimum degree, a treewidth lower bound and
/// hence a pathwidth one). Never exceeds the true pathwidth.
int pathwidth_lower_bound(const Graph& g);

}  // namespace sqroot
