#pragma once

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sqroot {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// Undirected edge in canonical (min, max) form.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertex ids 0..n-1 with bitset adjacency rows.
///
/// Construction is the only mutating phase (add_edge); every algorithm in
/// this library treats a Graph as immutable, so sharing across threads is
/// safe once built. Loops and out-of-range ids are rejected.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    static Graph from_edges(int n, std::span<const Edge> edges);

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return m_; }

    const Bitset& neighbours(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).count()); }

    /// All edges in canonical (min,max) lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<Bitset> adj_;

    void check_vertex(int v, const char* what) const;
};

/// Vertices of a bitset in ascending order.
std::vector<int> bits_of(const Bitset& bs);

/// G on the same vertex set, joining every pair at distance <= 2 in h.
Graph square(const Graph& h);

/// True iff square(h) has exactly the edge set of g. Throws on mismatched
/// vertex counts.
bool is_square_root(const Graph& h, const Graph& g);

int max_degree(const Graph& g);

/// Maximum distance between any two vertices. Throws if g is disconnected
/// or has no vertices.
int diameter(const Graph& g);

/// Connected components in ascending order of minimum vertex id; each
/// component's vertices sorted ascending.
std::vector<std::vector<int>> components(const Graph& g);

bool is_connected(const Graph& g);

/// Subgraph induced on `vertices` with ids remapped to 0..k-1 in the given
/// (ascending) order.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

std::string edge_to_string(const Edge& e);

/// Breadth-first distance levels of the component containing `source`.
///
/// levels[i] holds the vertices at distance i from the source, sorted.
/// parents/children record *all* neighbours one level up/down, not just
/// tree edges; tree_parent picks the lowest-id parent, which makes the
/// associated spanning tree canonical.
struct BfsLayering {
    int source = 0;
    std::vector<std::vector<int>> levels;
    std::vector<int> level_of;            // -1 for vertices outside the component
    std::vector<std::vector<int>> parents;
    std::vector<std::vector<int>> children;
    std::vector<int> tree_parent;         // -1 for source and unreachable vertices
    std::vector<std::vector<int>> tree_children;

    int eccentricity() const { return static_cast<int>(levels.size()) - 1; }
};

BfsLayering bfs_layering(const Graph& g, int source);

/// Distances from source; -1 where unreachable.
std::vector<int> bfs_distances(const Graph& g, int source);

/// A graph with required edges R (every solution must contain them) and
/// forbidden edges B (no solution may contain them). Both must be edges of
/// g; overlapping R and B is representable and simply unsatisfiable.
struct LabeledInstance {
    Graph g;
    std::vector<Edge> required;   // sorted, deduplicated
    std::vector<Edge> forbidden;  // sorted, deduplicated

    explicit LabeledInstance(Graph graph, std::vector<Edge> r = {}, std::vector<Edge> b = {});
};

}  // namespace sqroot
