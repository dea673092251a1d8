#include "sqroot/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace sqroot {

Graph::Graph(int n) : n_(n) {
    if (n < 0)
        throw std::invalid_argument("graph: negative vertex count");
    adj_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (const Edge& e : edges)
        g.add_edge(e.u, e.v);
    return g;
}

void Graph::check_vertex(int v, const char* what) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range(std::string(what) + ": vertex " + std::to_string(v) +
                                " outside 0.." + std::to_string(n_ - 1));
}

void Graph::add_edge(int u, int v) {
    check_vertex(u, "add_edge");
    check_vertex(v, "add_edge");
    if (u == v)
        throw std::invalid_argument("add_edge: loop at vertex " + std::to_string(u));
    if (adj_[u].test(v))
        return;
    adj_[u].set(v);
    adj_[v].set(u);
    ++m_;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u, "has_edge");
    check_vertex(v, "has_edge");
    return u != v && adj_[u].test(v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (auto v = adj_[u].find_next(u); v != Bitset::npos; v = adj_[u].find_next(v))
            out.emplace_back(u, static_cast<int>(v));
    return out;
}

std::vector<int> bits_of(const Bitset& bs) {
    std::vector<int> out;
    for (auto v = bs.find_first(); v != Bitset::npos; v = bs.find_next(v))
        out.push_back(static_cast<int>(v));
    return out;
}

Graph square(const Graph& h) {
    const int n = h.vertex_count();
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        Bitset row = h.neighbours(u);
        for (auto w = h.neighbours(u).find_first(); w != Bitset::npos;
             w = h.neighbours(u).find_next(w))
            row |= h.neighbours(static_cast<int>(w));
        row.reset(u);
        for (auto v = row.find_next(u); v != Bitset::npos; v = row.find_next(v))
            g.add_edge(u, static_cast<int>(v));
    }
    return g;
}

bool is_square_root(const Graph& h, const Graph& g) {
    if (h.vertex_count() != g.vertex_count())
        throw std::invalid_argument("is_square_root: vertex counts differ");
    const int n = h.vertex_count();
    for (int u = 0; u < n; ++u) {
        Bitset row = h.neighbours(u);
        for (auto w = h.neighbours(u).find_first(); w != Bitset::npos;
             w = h.neighbours(u).find_next(w))
            row |= h.neighbours(static_cast<int>(w));
        row.reset(u);
        if (row != g.neighbours(u))
            return false;
    }
    return true;
}

int max_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    if (source < 0 || source >= g.vertex_count())
        throw std::out_of_range("bfs_distances: bad source");
    std::deque<int> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        const Bitset& row = g.neighbours(u);
        for (auto v = row.find_first(); v != Bitset::npos; v = row.find_next(v)) {
            if (dist[v] < 0) {
                dist[v] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(static_cast<int>(v));
            }
        }
    }
    return dist;
}

int diameter(const Graph& g) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("diameter: graph has no vertices");
    int best = 0;
    for (int u = 0; u < g.vertex_count(); ++u) {
        const auto dist = bfs_distances(g, u);
        for (int d : dist) {
            if (d < 0)
                throw std::invalid_argument("diameter: graph is disconnected");
            best = std::max(best, d);
        }
    }
    return best;
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen[static_cast<std::size_t>(s)])
            continue;
        std::vector<int> comp;
        std::deque<int> queue{s};
        seen[static_cast<std::size_t>(s)] = true;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            comp.push_back(u);
            const Bitset& row = g.neighbours(u);
            for (auto v = row.find_first(); v != Bitset::npos; v = row.find_next(v)) {
                if (!seen[v]) {
                    seen[v] = true;
                    queue.push_back(static_cast<int>(v));
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0)
        return true;
    const auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> id_of(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        id_of[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
    Graph sub(static_cast<int>(vertices.size()));
    for (int u : vertices) {
        const Bitset& row = g.neighbours(u);
        for (auto v = row.find_next(u); v != Bitset::npos; v = row.find_next(v))
            if (id_of[v] >= 0)
                sub.add_edge(id_of[static_cast<std::size_t>(u)], id_of[v]);
    }
    return sub;
}

std::string edge_to_string(const Edge& e) {
    return std::to_string(e.u) + "-" + std::to_string(e.v);
}

BfsLayering bfs_layering(const Graph& g, int source) {
    if (source < 0 || source >= g.vertex_count())
        throw std::out_of_range("bfs_layering: bad source");
    const int n = g.vertex_count();
    BfsLayering out;
    out.source = source;
    out.level_of = bfs_distances(g, source);
    out.parents.resize(static_cast<std::size_t>(n));
    out.children.resize(static_cast<std::size_t>(n));
    out.tree_parent.assign(static_cast<std::size_t>(n), -1);
    out.tree_children.resize(static_cast<std::size_t>(n));

    int depth = 0;
    for (int d : out.level_of)
        depth = std::max(depth, d);
    out.levels.assign(static_cast<std::size_t>(depth) + 1, {});
    for (int v = 0; v < n; ++v)
        if (out.level_of[static_cast<std::size_t>(v)] >= 0)
            out.levels[static_cast<std::size_t>(out.level_of[static_cast<std::size_t>(v)])]
                .push_back(v);

    for (int v = 0; v < n; ++v) {
        const int lv = out.level_of[static_cast<std::size_t>(v)];
        if (lv < 0)
            continue;
        const Bitset& row = g.neighbours(v);
        for (auto w = row.find_first(); w != Bitset::npos; w = row.find_next(w)) {
            const int lw = out.level_of[w];
            if (lw == lv - 1)
                out.parents[static_cast<std::size_t>(v)].push_back(static_cast<int>(w));
            else if (lw == lv + 1)
                out.children[static_cast<std::size_t>(v)].push_back(static_cast<int>(w));
        }
        if (!out.parents[static_cast<std::size_t>(v)].empty())
            out.tree_parent[static_cast<std::size_t>(v)] =
                out.parents[static_cast<std::size_t>(v)].front();
    }
    for (int v = 0; v < n; ++v)
        if (out.tree_parent[static_cast<std::size_t>(v)] >= 0)
            out.tree_children[static_cast<std::size_t>(out.tree_parent[static_cast<std::size_t>(v)])]
                .push_back(v);
    return out;
}

namespace {

std::vector<Edge> normalize_edge_list(const Graph& g, std::vector<Edge> edges, const char* what) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (const Edge& e : edges)
        if (!g.has_edge(e.u, e.v))
            throw std::invalid_argument(std::string(what) + " edge " + edge_to_string(e) +
                                        " is not an edge of the graph");
    return edges;
}

}  // namespace

LabeledInstance::LabeledInstance(Graph graph, std::vector<Edge> r, std::vector<Edge> b)
    : g(std::move(graph)),
      required(normalize_edge_list(g, std::move(r), "required")),
      forbidden(normalize_edge_list(g, std::move(b), "forbidden")) {}

}  // namespace sqroot
