#include "sqroot/pathwidth.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace sqroot {

namespace {

// ---- lower bounds -------------------------------------------------------

int greedy_clique_size(const Graph& g) {
    const int n = g.vertex_count();
    int best = n > 0 ? 1 : 0;
    for (int seed = 0; seed < n; ++seed) {
        Bitset candidates = g.neighbours(seed);
        Bitset clique(static_cast<std::size_t>(n));
        clique.set(seed);
        int size = 1;
        while (candidates.any()) {
            // Pick the candidate with the most neighbours among the rest.
            int pick = -1;
            std::size_t pick_score = 0;
            for (auto v = candidates.find_first(); v != Bitset::npos;
                 v = candidates.find_next(v)) {
                const std::size_t score =
                    (g.neighbours(static_cast<int>(v)) & candidates).count();
                if (pick < 0 || score > pick_score) {
                    pick = static_cast<int>(v);
                    pick_score = score;
                }
            }
            clique.set(pick);
            ++size;
            candidates &= g.neighbours(pick);
        }
        best = std::max(best, size);
    }
    return best;
}

int degeneracy(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> degree(static_cast<std::size_t>(n));
    Bitset alive(static_cast<std::size_t>(n));
    alive.set();
    for (int v = 0; v < n; ++v)
        degree[static_cast<std::size_t>(v)] = g.degree(v);
    int best = 0;
    for (int round = 0; round < n; ++round) {
        int v = -1;
        for (auto w = alive.find_first(); w != Bitset::npos; w = alive.find_next(w))
            if (v < 0 || degree[w] < degree[static_cast<std::size_t>(v)])
                v = static_cast<int>(w);
        best = std::max(best, degree[static_cast<std::size_t>(v)]);
        alive.reset(v);
        const Bitset row = g.neighbours(v) & alive;
        for (auto w = row.find_first(); w != Bitset::npos; w = row.find_next(w))
            --degree[w];
    }
    return best;
}

// Greedy contraction degeneracy: repeatedly contract a minimum-degree
// vertex into the neighbour sharing the fewest common neighbours, tracking
// the largest minimum degree seen. Every intermediate graph is a minor, so
// its minimum degree bounds the treewidth (and pathwidth) from below.
// Degrees are cached and refreshed only for rows a contraction touches.
int contraction_degeneracy(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Bitset> adj;
    adj.reserve(static_cast<std::size_t>(n));
    std::vector<int> degree(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        adj.push_back(g.neighbours(v));
        degree[static_cast<std::size_t>(v)] = g.degree(v);
    }
    Bitset alive(static_cast<std::size_t>(n));
    alive.set();

    int best = 0;
    for (int remaining = n; remaining >= 2; --remaining) {
        int v = -1;
        for (auto w = alive.find_first(); w != Bitset::npos; w = alive.find_next(w))
            if (v < 0 || degree[w] < degree[static_cast<std::size_t>(v)])
                v = static_cast<int>(w);
        best = std::max(best, degree[static_cast<std::size_t>(v)]);
        if (degree[static_cast<std::size_t>(v)] == 0) {
            alive.reset(v);
            continue;
        }
        int into = -1;
        std::size_t into_shared = 0;
        for (auto w = adj[static_cast<std::size_t>(v)].find_first(); w != Bitset::npos;
             w = adj[static_cast<std::size_t>(v)].find_next(w)) {
            const std::size_t shared = (adj[w] & adj[static_cast<std::size_t>(v)]).count();
            if (into < 0 || shared < into_shared) {
                into = static_cast<int>(w);
                into_shared = shared;
            }
        }
        // Merge v into `into`.
        adj[static_cast<std::size_t>(into)] |= adj[static_cast<std::size_t>(v)];
        adj[static_cast<std::size_t>(into)].reset(into);
        adj[static_cast<std::size_t>(into)].reset(v);
        for (auto w = adj[static_cast<std::size_t>(v)].find_first(); w != Bitset::npos;
             w = adj[static_cast<std::size_t>(v)].find_next(w)) {
            adj[w].reset(v);
            if (static_cast<int>(w) != into)
                adj[w].set(into);
            degree[w] = static_cast<int>(adj[w].count());
        }
        degree[static_cast<std::size_t>(into)] =
            static_cast<int>(adj[static_cast<std::size_t>(into)].count());
        alive.reset(v);
    }
    return best;
}

// ---- decompositions from layouts and levels -----------------------------

PathDecomposition decomposition_from_layout(const Graph& g, const std::vector<int>& order) {
    const int n = g.vertex_count();
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    PathDecomposition pd;
    for (int i = 0; i < n; ++i) {
        std::vector<int> bag{order[static_cast<std::size_t>(i)]};
        for (int j = 0; j < i; ++j) {
            const int u = order[static_cast<std::size_t>(j)];
            const Bitset& row = g.neighbours(u);
            bool active = false;
            for (auto w = row.find_first(); w != Bitset::npos; w = row.find_next(w))
                if (pos[w] >= i) {
                    active = true;
                    break;
                }
            if (active)
                bag.push_back(u);
        }
        std::sort(bag.begin(), bag.end());
        pd.bags.push_back(std::move(bag));
    }
    return pd;
}

// Path decomposition of a connected graph from BFS levels: bags of two
// consecutive levels. Cheap upper-bound route.
PathDecomposition level_pair_decomposition(const Graph& g, int source) {
    const auto layers = bfs_layering(g, source);
    const int s = layers.eccentricity();
    PathDecomposition pd;
    for (int i = 0; i <= std::max(0, s - 1); ++i) {
        std::vector<int> bag = layers.levels[static_cast<std::size_t>(i)];
        if (i + 1 <= s) {
            const auto& next = layers.levels[static_cast<std::size_t>(i) + 1];
            bag.insert(bag.end(), next.begin(), next.end());
        }
        std::sort(bag.begin(), bag.end());
        pd.bags.push_back(std::move(bag));
    }
    return pd;
}

// ---- exact search (vertex separation) -----------------------------------

struct SeparationSearch {
    const Graph& g;
    int n;
    int k;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    std::unordered_set<std::uint64_t> dead;  // prefixes that cannot finish
    std::vector<int> order;

    SeparationSearch(const Graph& graph, int cap, std::uint64_t node_budget)
        : g(graph), n(graph.vertex_count()), k(cap), budget(node_budget) {}

    int boundary_size(std::uint64_t mask, std::uint64_t not_mask_bits) const {
        int size = 0;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) {
                // Any neighbour outside the prefix keeps v active.
                const Bitset& row = g.neighbours(v);
                for (auto w = row.find_first(); w != Bitset::npos; w = row.find_next(w))
                    if ((not_mask_bits >> w) & 1) {
                        ++size;
                        break;
                    }
            }
        return size;
    }

    bool extend(std::uint64_t mask, int placed) {
        if (placed == n)
            return true;
        if (dead.count(mask))
            return false;
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        const std::uint64_t full = (n == 64) ? ~std::uint64_t{0}
                                             : ((std::uint64_t{1} << n) - 1);
        for (int v = 0; v < n; ++v) {
            if ((mask >> v) & 1)
                continue;
            const std::uint64_t next = mask | (std::uint64_t{1} << v);
            if (boundary_size(next, full & ~next) > k)
                continue;
            order.push_back(v);
            if (extend(next, placed + 1))
                return true;
            order.pop_back();
            if (out_of_budget)
                return false;
        }
        dead.insert(mask);
        return false;
    }
};

PathwidthResult component_pathwidth_at_most(const Graph& g, int k, std::uint64_t budget) {
    PathwidthResult result;
    const int n = g.vertex_count();

    if (n == 0) {
        result.answer = Ternary::Yes;
        result.decomposition = PathDecomposition{};
        return result;
    }
    if (n <= k + 1) {
        std::vector<int> bag(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            bag[static_cast<std::size_t>(v)] = v;
        result.answer = Ternary::Yes;
        result.decomposition = PathDecomposition{{bag}};
        return result;
    }

    if (pathwidth_lower_bound(g) > k) {
        result.answer = Ternary::No;
        return result;
    }

    // Cheap upper bound: consecutive BFS level pairs from a few sources.
    const int stride = n <= 256 ? 1 : (n + 255) / 256;
    for (int source = 0; source < n; source += stride) {
        PathDecomposition pd = level_pair_decomposition(g, source);
        if (pd.width() <= k && validate_path_decomposition(g, pd)) {
            result.answer = Ternary::Yes;
            result.decomposition = std::move(pd);
            return result;
        }
    }

    if (n > 64) {
        result.answer = Ternary::Undecided;
        return result;
    }

    SeparationSearch search(g, k, budget);
    const bool found = search.extend(0, 0);
    result.nodes = search.nodes;
    if (search.out_of_budget) {
        result.answer = Ternary::Undecided;
        return result;
    }
    if (!found) {
        result.answer = Ternary::No;
        return result;
    }
    PathDecomposition pd = decomposition_from_layout(g, search.order);
    if (pd.width() > k || !validate_path_decomposition(g, pd))
        throw std::logic_error("pathwidth_at_most: layout produced a bad decomposition");
    result.answer = Ternary::Yes;
    result.decomposition = std::move(pd);
    return result;
}

}  // namespace

PathwidthResult pathwidth_at_most(const Graph& g, int k, std::uint64_t node_budget) {
    if (k < 0)
        throw std::invalid_argument("pathwidth_at_most: negative width");
    PathwidthResult combined;
    combined.answer = Ternary::Yes;
    combined.decomposition = PathDecomposition{};

    for (const auto& comp_vertices : components(g)) {
        const Graph comp = induced_subgraph(g, comp_vertices);
        PathwidthResult sub = component_pathwidth_at_most(comp, k, node_budget);
        combined.nodes += sub.nodes;
        if (sub.answer == Ternary::No)
            return PathwidthResult{Ternary::No, std::nullopt, combined.nodes};
        if (sub.answer == Ternary::Undecided) {
            combined.answer = Ternary::Undecided;
            combined.decomposition.reset();
            continue;
        }
        if (combined.answer != Ternary::Yes)
            continue;
        // Concatenate bags, mapped back to original ids.
        for (const auto& bag : sub.decomposition->bags) {
            std::vector<int> mapped;
            mapped.reserve(bag.size());
            for (int v : bag)
                mapped.push_back(comp_vertices[static_cast<std::size_t>(v)]);
            std::sort(mapped.begin(), mapped.end());
            combined.decomposition->bags.push_back(std::move(mapped));
        }
    }
    if (combined.answer == Ternary::Yes && g.vertex_count() > 0 &&
        combined.decomposition->bags.empty())
        combined.decomposition->bags.push_back({});
    return combined;
}

int pathwidth_lower_bound(const Graph& g) {
    if (g.vertex_count() == 0)
        return 0;
    int best = 0;
    for (const auto& comp_vertices : components(g)) {
        const Graph comp = induced_subgraph(g, comp_vertices);
        int bound = std::max(greedy_clique_size(comp) - 1, degeneracy(comp));
        bound = std::max(bound, contraction_degeneracy(comp));
        best = std::max(best, bound);
    }
    return best;
}

}  // namespace sqroot
