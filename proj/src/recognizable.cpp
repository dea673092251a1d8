#include "sqroot/recognizable.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sqroot {

namespace {

// Connected components of the subgraph induced on `mask`, as bitsets.
std::vector<Bitset> mask_components(const Graph& g, const Bitset& mask) {
    std::vector<Bitset> comps;
    Bitset todo = mask;
    while (todo.any()) {
        Bitset comp(mask.size());
        Bitset frontier(mask.size());
        frontier.set(todo.find_first());
        while (frontier.any()) {
            comp |= frontier;
            Bitset next(mask.size());
            for (auto v = frontier.find_first(); v != Bitset::npos; v = frontier.find_next(v))
                next |= g.neighbours(static_cast<int>(v));
            next &= mask;
            next -= comp;
            frontier = std::move(next);
        }
        todo -= comp;
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_clique(const Graph& g, const Bitset& set) {
    for (auto v = set.find_first(); v != Bitset::npos; v = set.find_next(v)) {
        Bitset rest = set;
        rest.reset(v);
        if ((g.neighbours(static_cast<int>(v)) & rest) != rest)
            return false;
    }
    return true;
}

// Conditions c..f for one side: every w in N(a) outside the partition and
// distinct from the other endpoint must miss `far` entirely and hit `near`
// at least once.
bool outside_neighbours_ok(const Graph& g, int a, int other, const Bitset& x_side,
                           const Bitset& y_side, const Bitset& near, const Bitset& far) {
    Bitset outside = g.neighbours(a);
    outside -= x_side;
    outside -= y_side;
    outside.reset(other);
    for (auto w = outside.find_first(); w != Bitset::npos; w = outside.find_next(w)) {
        const Bitset& row = g.neighbours(static_cast<int>(w));
        if ((row & far).any())
            return false;
        if (!(row & near).any())
            return false;
    }
    return true;
}

bool partition_ok(const Graph& g, int u, int v, const Bitset& x, const Bitset& y) {
    if (!x.any() || !y.any())
        return false;
    if (!is_clique(g, x) || !is_clique(g, y))
        return false;
    for (auto a = x.find_first(); a != Bitset::npos; a = x.find_next(a))
        if ((g.neighbours(static_cast<int>(a)) & y).any())
            return false;
    return outside_neighbours_ok(g, u, v, x, y, x, y) &&
           outside_neighbours_ok(g, v, u, x, y, y, x);
}

// Lexicographic order on sorted vertex lists.
bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

bool verify_recognizable_partition(const Graph& g, const RecognizablePartition& w) {
    const int n = g.vertex_count();
    if (w.u < 0 || w.u >= n || w.v < 0 || w.v >= n || !g.has_edge(w.u, w.v))
        return false;
    Bitset x(static_cast<std::size_t>(n));
    Bitset y(static_cast<std::size_t>(n));
    for (int a : w.x) {
        if (a < 0 || a >= n || x.test(a))
            return false;
        x.set(a);
    }
    for (int b : w.y) {
        if (b < 0 || b >= n || y.test(b) || x.test(b))
            return false;
        y.set(b);
    }
    const Bitset common = g.neighbours(w.u) & g.neighbours(w.v);
    if ((x | y) != common)
        return false;
    return partition_ok(g, w.u, w.v, x, y);
}

std::optional<RecognizablePartition> recognizable_partition(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v))
        throw std::invalid_argument("recognizable_partition: " + edge_to_string(Edge(u, v)) +
                                    " is not an edge");
    const Bitset common = g.neighbours(u) & g.neighbours(v);
    if (common.count() < 2)
        return std::nullopt;

    const auto comps = mask_components(g, common);
    for (const Bitset& comp : comps)
        if (!is_clique(g, comp))
            return std::nullopt;

    const std::size_t c = comps.size();
    if (c < 2)
        return std::nullopt;

    std::optional<RecognizablePartition> best;
    auto consider = [&](const Bitset& x, const Bitset& y) {
        if (!partition_ok(g, u, v, x, y))
            return;
        RecognizablePartition w;
        w.u = u;
        w.v = v;
        w.x = bits_of(x);
        w.y = bits_of(y);
        if (!best || lex_less(w.x, best->x))
            best = std::move(w);
    };

    if (c > 16) {
        // A side holding two distinct components is never a clique (a cross
        // edge would have merged them), so with three or more components
        // every full assignment fails condition a). Skip the 2^c sweep.
        return std::nullopt;
    }
    for (std::uint64_t assign = 1; assign + 1 < (std::uint64_t{1} << c); ++assign) {
        Bitset x(common.size());
        Bitset y(common.size());
        for (std::size_t i = 0; i < c; ++i)
            ((assign >> i) & 1 ? x : y) |= comps[i];
        consider(x, y);
    }
    return best;
}

std::optional<std::pair<Edge, RecognizablePartition>> find_recognizable_edge(const Graph& g) {
    for (const Edge& e : g.edges())
        if (auto w = recognizable_partition(g, e.u, e.v))
            return std::make_pair(e, std::move(*w));
    return std::nullopt;
}

std::vector<std::pair<Edge, RecognizablePartition>> find_all_recognizable_edges(const Graph& g) {
    std::vector<std::pair<Edge, RecognizablePartition>> out;
    for (const Edge& e : g.edges())
        if (auto w = recognizable_partition(g, e.u, e.v))
            out.emplace_back(e, std::move(*w));
    return out;
}

std::string to_string(const RecognizablePartition& w) {
    auto set_text = [](const std::vector<int>& xs) {
        std::ostringstream out;
        out << '{';
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i)
                out << ',';
            out << xs[i];
        }
        out << '}';
        return out.str();
    };
    std::ostringstream out;
    out << "edge " << w.u << ' ' << w.v << " | X = " << set_text(w.x)
        << " | Y = " << set_text(w.y);
    return out.str();
}

}  // namespace sqroot
