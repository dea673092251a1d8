#pragma once

// Deliberately naive reference implementations used to cross-check the
// library. Everything here recomputes from first principles and must stay
// independent of the code paths under test.

#include "sqroot/graph.hpp"
#include "sqroot/recognizable.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace sqroot::testing {

// All-pairs distances by repeated relaxation (Floyd-Warshall).
inline std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
    const int n = g.vertex_count();
    constexpr int kInf = 1 << 28;
    std::vector<std::vector<int>> dist(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n), kInf));
    for (int v = 0; v < n; ++v)
        dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = 0;
    for (const Edge& e : g.edges()) {
        dist[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
        dist[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::min(
                    dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                    dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +
                        dist[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
    return dist;
}

// Square by the distance definition rather than neighbourhood unions.
inline Graph square_by_distances(const Graph& h) {
    const auto dist = all_pairs_distances(h);
    Graph g(h.vertex_count());
    for (int u = 0; u < h.vertex_count(); ++u)
        for (int v = u + 1; v < h.vertex_count(); ++v)
            if (dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] <= 2)
                g.add_edge(u, v);
    return g;
}

// Literal check of the six recognizable-edge conditions on explicit sets.
inline bool naive_conditions_hold(const Graph& g, int u, int v, const std::vector<int>& x,
                                  const std::vector<int>& y) {
    if (x.empty() || y.empty())
        return false;
    auto adjacent = [&](int a, int b) { return g.has_edge(a, b); };
    auto in = [](const std::vector<int>& set, int a) {
        return std::find(set.begin(), set.end(), a) != set.end();
    };
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (!adjacent(x[i], x[j]))
                return false;
    for (std::size_t i = 0; i < y.size(); ++i)
        for (std::size_t j = i + 1; j < y.size(); ++j)
            if (!adjacent(y[i], y[j]))
                return false;
    for (int a : x)
        for (int b : y)
            if (adjacent(a, b))
                return false;
    for (auto w = g.neighbours(u).find_first(); w != Bitset::npos;
         w = g.neighbours(u).find_next(w)) {
        const int wi = static_cast<int>(w);
        if (wi == v || in(x, wi) || in(y, wi))
            continue;
        for (int b : y)
            if (adjacent(wi, b))
                return false;
        bool hits_x = false;
        for (int a : x)
            if (adjacent(wi, a))
                hits_x = true;
        if (!hits_x)
            return false;
    }
    for (auto w = g.neighbours(v).find_first(); w != Bitset::npos;
         w = g.neighbours(v).find_next(w)) {
        const int wi = static_cast<int>(w);
        if (wi == u || in(x, wi) || in(y, wi))
            continue;
        for (int a : x)
            if (adjacent(wi, a))
                return false;
        bool hits_y = false;
        for (int b : y)
            if (adjacent(wi, b))
                hits_y = true;
        if (!hits_y)
            return false;
    }
    return true;
}

// Enumerates every 2-set partition of the common neighbourhood directly and
// returns the witness with lexicographically least X, if any.
inline std::optional<RecognizablePartition> naive_recognizable_partition(const Graph& g, int u,
                                                                         int v) {
    const auto common = bits_of(g.neighbours(u) & g.neighbours(v));
    const std::size_t c = common.size();
    std::optional<RecognizablePartition> best;
    for (std::uint64_t pick = 1; c >= 1 && pick + 1 < (std::uint64_t{1} << c); ++pick) {
        std::vector<int> x, y;
        for (std::size_t i = 0; i < c; ++i)
            ((pick >> i) & 1 ? x : y).push_back(common[i]);
        if (!naive_conditions_hold(g, u, v, x, y))
            continue;
        if (!best || std::lexicographical_compare(x.begin(), x.end(), best->x.begin(),
                                                  best->x.end()))
            best = RecognizablePartition{u, v, x, y};
    }
    return best;
}

// Exact pathwidth as the vertex separation number, by trying every layout.
// A placed vertex v stays on the boundary until its last neighbour is
// placed, so each layout reduces to an interval-overlap sweep.
inline int pathwidth_by_layouts(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0)
        return -1;
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> pos(static_cast<std::size_t>(n));
    std::vector<int> delta(static_cast<std::size_t>(n) + 1);
    int best = n;
    do {
        for (int i = 0; i < n; ++i)
            pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
        std::fill(delta.begin(), delta.end(), 0);
        for (int v = 0; v < n; ++v) {
            int last = -1;
            for (auto w = g.neighbours(v).find_first(); w != Bitset::npos;
                 w = g.neighbours(v).find_next(w))
                last = std::max(last, pos[w]);
            // v is active at cut i (after placing position i) when
            // pos[v] <= i < last.
            if (last > pos[static_cast<std::size_t>(v)]) {
                ++delta[static_cast<std::size_t>(pos[static_cast<std::size_t>(v)])];
                --delta[static_cast<std::size_t>(last)];
            }
        }
        int worst = 0, running = 0;
        for (int i = 0; i < n; ++i) {
            running += delta[static_cast<std::size_t>(i)];
            worst = std::max(worst, running);
        }
        best = std::min(best, worst);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

}  // namespace sqroot::testing
