#include "sqroot/decomposition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sqroot {

int PathDecomposition::width() const {
    std::size_t largest = 0;
    for (const auto& bag : bags)
        largest = std::max(largest, bag.size());
    return static_cast<int>(largest) - 1;
}

std::string PathDecomposition::to_text() const {
    std::ostringstream out;
    for (const auto& bag : bags) {
        for (std::size_t i = 0; i < bag.size(); ++i) {
            if (i)
                out << ' ';
            out << bag[i];
        }
        out << '\n';
    }
    return out.str();
}

PathDecomposition PathDecomposition::from_text(const std::string& text) {
    PathDecomposition pd;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::vector<int> bag;
        int v;
        while (fields >> v)
            bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        pd.bags.push_back(std::move(bag));
    }
    return pd;
}

bool validate_path_decomposition(const Graph& g, const PathDecomposition& pd) {
    const int n = g.vertex_count();
    const int t = static_cast<int>(pd.bags.size());
    std::vector<int> first(static_cast<std::size_t>(n), -1);
    std::vector<int> last(static_cast<std::size_t>(n), -1);
    std::vector<Bitset> bag_sets;
    bag_sets.reserve(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
        Bitset bs(static_cast<std::size_t>(n));
        for (int v : pd.bags[static_cast<std::size_t>(i)]) {
            if (v < 0 || v >= n)
                return false;
            bs.set(v);
            if (first[static_cast<std::size_t>(v)] < 0)
                first[static_cast<std::size_t>(v)] = i;
            last[static_cast<std::size_t>(v)] = i;
        }
        bag_sets.push_back(std::move(bs));
    }

    // Coverage.
    for (int v = 0; v < n; ++v)
        if (first[static_cast<std::size_t>(v)] < 0)
            return false;
    // Contiguity: every bag between first and last occurrence contains v.
    for (int v = 0; v < n; ++v)
        for (int i = first[static_cast<std::size_t>(v)]; i <= last[static_cast<std::size_t>(v)]; ++i)
            if (!bag_sets[static_cast<std::size_t>(i)].test(v))
                return false;
    // Edge coverage.
    for (const Edge& e : g.edges()) {
        const int lo = std::max(first[static_cast<std::size_t>(e.u)],
                                first[static_cast<std::size_t>(e.v)]);
        const int hi = std::min(last[static_cast<std::size_t>(e.u)],
                                last[static_cast<std::size_t>(e.v)]);
        if (lo > hi)
            return false;
    }
    return true;
}

PathDecomposition bfs_triple_decomposition(const Graph& h, int source) {
    if (!is_connected(h))
        throw std::invalid_argument("bfs_triple_decomposition: graph is disconnected");
    const auto layers = bfs_layering(h, source);
    const int s = layers.eccentricity();
    PathDecomposition pd;
    for (int i = 0; i <= s; ++i) {
        std::vector<int> bag;
        for (int j = i; j <= std::min(i + 2, s); ++j)
            bag.insert(bag.end(), layers.levels[static_cast<std::size_t>(j)].begin(),
                       layers.levels[static_cast<std::size_t>(j)].end());
        std::sort(bag.begin(), bag.end());
        pd.bags.push_back(std::move(bag));
    }
    if (!validate_path_decomposition(square(h), pd))
        throw std::logic_error("bfs_triple_decomposition: produced an invalid decomposition");
    return pd;
}

}  // namespace sqroot
