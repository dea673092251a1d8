#include "sqroot/generators.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

namespace sqroot {

const char* to_string(DegreeProfile p) {
    switch (p) {
        case DegreeProfile::AtMost5: return "le5";
        case DegreeProfile::AtMost6: return "le6";
        case DegreeProfile::Exactly7: return "eq7";
        case DegreeProfile::Unbounded: return "unbounded";
    }
    return "?";
}

Graph wall(int height) {
    if (height < 2)
        throw std::invalid_argument("wall: height must be at least 2");
    const int h = height;
    const int max_col = 2 * h + 1;

    auto row_has = [&](int y, int x) {
        if (x < 0 || x > max_col)
            return false;
        if (y == 0)
            return x >= 1;
        if (y == h)
            return (h % 2 == 0) ? x <= max_col - 1 : x >= 1;
        return true;
    };

    std::map<std::pair<int, int>, int> id;
    int next = 0;
    for (int y = 0; y <= h; ++y)
        for (int x = 0; x <= max_col; ++x)
            if (row_has(y, x))
                id[{y, x}] = next++;

    Graph g(next);
    for (int y = 0; y <= h; ++y)
        for (int x = 0; x < max_col; ++x)
            if (row_has(y, x) && row_has(y, x + 1))
                g.add_edge(id[{y, x}], id[{y, x + 1}]);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x <= max_col; ++x)
            if (x % 2 == (y + 1) % 2 && row_has(y, x) && row_has(y + 1, x))
                g.add_edge(id[{y, x}], id[{y + 1, x}]);
    return g;
}

Graph subdivide(const Graph& g) {
    const auto original = g.edges();
    const int n = g.vertex_count();
    Graph out(n + static_cast<int>(original.size()));
    for (std::size_t k = 0; k < original.size(); ++k) {
        const int mid = n + static_cast<int>(k);
        out.add_edge(original[k].u, mid);
        out.add_edge(mid, original[k].v);
    }
    return out;
}

Graph ladder(int rungs) {
    if (rungs < 1)
        throw std::invalid_argument("ladder: need at least one rung");
    const int n = rungs;
    Graph g(2 * n);
    for (int i = 0; i + 1 < n; ++i) {
        g.add_edge(i, i + 1);
        g.add_edge(n + i, n + i + 1);
    }
    for (int i = 0; i < n; ++i)
        g.add_edge(i, n + i);
    return g;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0)
        throw std::invalid_argument("uniform_below: zero bound");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                (std::numeric_limits<std::uint64_t>::max() % bound);
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % bound;
}

namespace {

bool profile_cap_ok(const Graph& root, DegreeProfile profile) {
    const int cap = profile == DegreeProfile::AtMost5    ? 5
                    : profile == DegreeProfile::AtMost6  ? 6
                    : profile == DegreeProfile::Exactly7 ? 7
                                                         : -1;
    if (cap < 0)
        return true;
    return max_degree(square(root)) <= cap;
}

bool profile_final_ok(const Graph& root, DegreeProfile profile) {
    const int delta = max_degree(square(root));
    switch (profile) {
        case DegreeProfile::AtMost5: return delta <= 5;
        case DegreeProfile::AtMost6: return delta <= 6;
        case DegreeProfile::Exactly7: return delta == 7;
        case DegreeProfile::Unbounded: return true;
    }
    return false;
}

// One growth attempt: add vertices one at a time, each attached to a random
// existing vertex that keeps the squared degree inside the profile cap,
// then try a few extra edges under the same cap. Returns nullopt when the
// growth gets stuck.
std::optional<Graph> grow_once(std::mt19937_64& rng, int n, DegreeProfile profile) {
    Graph root(n);
    std::vector<Edge> chosen;
    for (int v = 1; v < n; ++v) {
        std::vector<int> order(static_cast<std::size_t>(v));
        for (int i = 0; i < v; ++i)
            order[static_cast<std::size_t>(i)] = i;
        for (int i = v - 1; i > 0; --i)
            std::swap(order[static_cast<std::size_t>(i)],
                      order[uniform_below(rng, static_cast<std::uint64_t>(i) + 1)]);

        bool attached = false;
        for (int candidate : order) {
            Graph trial(n);
            for (const Edge& e : chosen)
                trial.add_edge(e.u, e.v);
            trial.add_edge(candidate, v);
            // Only the first v+1 vertices exist so far; isolated tail
            // vertices do not affect the squared degrees.
            if (profile_cap_ok(trial, profile)) {
                chosen.emplace_back(candidate, v);
                root = std::move(trial);
                attached = true;
                break;
            }
        }
        if (!attached)
            return std::nullopt;
    }

    // Extra edges beyond the tree, kept only when the cap survives.
    if (n >= 3) {
        const int attempts = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n))) / 2;
        for (int t = 0; t < attempts; ++t) {
            const int a = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
            const int b = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
            if (a == b || root.has_edge(a, b))
                continue;
            Graph trial = root;
            trial.add_edge(a, b);
            if (profile_cap_ok(trial, profile))
                root = std::move(trial);
        }
    }
    return root;
}

}  // namespace

PlantedInstance planted(std::uint64_t seed, int n, DegreeProfile profile) {
    if (n < 1)
        throw std::invalid_argument("planted: need at least one vertex");
    std::mt19937_64 rng(seed);
    constexpr int kMaxAttempts = 2000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        auto root = grow_once(rng, n, profile);
        if (!root || !profile_final_ok(*root, profile))
            continue;
        PlantedInstance inst;
        inst.root = std::move(*root);
        inst.square = square(inst.root);
        inst.profile = profile;
        inst.seed = seed;
        return inst;
    }
    throw std::runtime_error(
        "planted: rejection budget exhausted; try a smaller n or a looser profile");
}

}  // namespace sqroot
