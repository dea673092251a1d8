#include "sqroot/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <set>
#include <sstream>

namespace sqroot {

namespace {

constexpr int kG6Low = 63;    // '?'
constexpr int kG6High = 126;  // '~'

struct G6Reader {
    std::string_view text;
    std::size_t pos = 0;

    int take() {
        if (pos >= text.size())
            throw ParseError("graph6: unexpected end of input", pos);
        const unsigned char c = static_cast<unsigned char>(text[pos]);
        if (c < kG6Low || c > kG6High)
            throw ParseError("graph6: byte out of range 63..126", pos);
        ++pos;
        return c - kG6Low;
    }
};

std::uint64_t read_g6_order(G6Reader& r) {
    int first = r.take();
    if (first < 63)
        return static_cast<std::uint64_t>(first);
    // 126 escape: 3-byte (18-bit) or, after a second 126, 6-byte (36-bit) order.
    int next = r.take();
    int groups = 3;
    std::uint64_t value = 0;
    if (next == 63) {
        groups = 6;
    } else {
        value = static_cast<std::uint64_t>(next);
        groups = 2;
    }
    for (int i = 0; i < groups; ++i)
        value = (value << 6) | static_cast<std::uint64_t>(r.take());
    return value;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    std::string_view body = text;
    const std::string_view header = ">>graph6<<";
    std::size_t base = 0;
    if (body.substr(0, header.size()) == header) {
        body.remove_prefix(header.size());
        base = header.size();
    }

    G6Reader reader{body};
    std::uint64_t order;
    try {
        order = read_g6_order(reader);
    } catch (const ParseError& e) {
        throw ParseError("graph6: malformed order field", base + e.offset());
    }
    if (order > (std::uint64_t{1} << 36) - 1)
        throw ParseError("graph6: order exceeds 2^36-1", base);

    // The body must hold one 6-bit group per 6 upper-triangle bits; check
    // before allocating adjacency for a bogus huge order.
    {
        const unsigned __int128 bits = static_cast<unsigned __int128>(order) * (order - (order > 0)) / 2;
        const unsigned __int128 required = (bits + 5) / 6;
        if (static_cast<unsigned __int128>(body.size() - reader.pos) < required)
            throw ParseError("graph6: body shorter than the declared order requires",
                             base + body.size());
    }
    if (order > std::uint64_t{std::numeric_limits<int>::max()})
        throw ParseError("graph6: order too large for this build", base);

    const int n = static_cast<int>(order);
    Graph g(n);
    int group = 0;
    int bits_left = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (bits_left == 0) {
                group = reader.take();
                bits_left = 6;
            }
            if (group & (1 << (bits_left - 1)))
                g.add_edge(row, col);
            --bits_left;
        }
    }
    if (bits_left > 0 && (group & ((1 << bits_left) - 1)) != 0)
        throw ParseError("graph6: nonzero padding bits", base + reader.pos - 1);

    // Allow a single trailing newline, nothing else.
    std::size_t tail = reader.pos;
    if (tail < body.size() && (body[tail] == '\n' || body[tail] == '\r')) {
        if (body[tail] == '\r' && tail + 1 < body.size() && body[tail + 1] == '\n')
            ++tail;
        ++tail;
    }
    if (tail != body.size())
        throw ParseError("graph6: trailing bytes after graph", base + tail);
    return g;
}

std::string emit_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Low));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Low));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Low));
        out.push_back(static_cast<char>((n & 63) + kG6Low));
    } else {
        out.push_back('~');
        out.push_back('~');
        const std::uint64_t big = static_cast<std::uint64_t>(n);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((big >> shift) & 63) + kG6Low));
    }

    int group = 0;
    int bits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            group = (group << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(group + kG6Low));
                group = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0)
        out.push_back(static_cast<char>((group << (6 - bits)) + kG6Low));
    return out;
}

namespace {

struct LineReader {
    std::string_view text;
    std::size_t pos = 0;

    void skip_spaces() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
            ++pos;
    }

    bool at_line_end() {
        skip_spaces();
        return pos >= text.size() || text[pos] == '\n' || text[pos] == '\r';
    }

    void expect_newline(const char* context) {
        skip_spaces();
        if (pos >= text.size())
            return;
        if (text[pos] == '\r')
            ++pos;
        if (pos < text.size() && text[pos] == '\n') {
            ++pos;
            return;
        }
        throw ParseError(std::string("edgelist: expected end of line after ") + context, pos);
    }

    long long read_int(const char* what) {
        skip_spaces();
        const std::size_t start = pos;
        long long value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc() || ptr == text.data() + pos)
            throw ParseError(std::string("edgelist: expected integer ") + what, start);
        pos = static_cast<std::size_t>(ptr - text.data());
        return value;
    }

    void skip_blank_lines() {
        while (pos < text.size() && (text[pos] == '\n' || text[pos] == '\r'))
            ++pos;
    }
};

}  // namespace

Graph parse_edgelist(std::string_view text) {
    LineReader r{text};
    const long long n = r.read_int("vertex count");
    const long long m = r.read_int("edge count");
    if (n < 0 || n > std::numeric_limits<int>::max())
        throw ParseError("edgelist: bad vertex count", 0);
    if (m < 0)
        throw ParseError("edgelist: bad edge count", 0);
    r.expect_newline("header");

    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        r.skip_blank_lines();
        const std::size_t at = r.pos;
        const long long u = r.read_int("endpoint");
        const long long v = r.read_int("endpoint");
        if (u < 0 || u >= n || v < 0 || v >= n || u == v)
            throw ParseError("edgelist: endpoint out of range", at);
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
        r.expect_newline("edge");
    }
    r.skip_blank_lines();
    r.skip_spaces();
    if (r.pos != text.size())
        throw ParseError("edgelist: trailing bytes after last edge", r.pos);
    return g;
}

std::string emit_edgelist(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

std::string emit_dot(const Graph& g, const std::vector<Edge>& highlighted) {
    std::set<Edge> solid(highlighted.begin(), highlighted.end());
    const bool everything_solid = highlighted.empty();
    std::ostringstream out;
    out << "graph g {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out << "  " << v << ";\n";
    for (const Edge& e : g.edges()) {
        out << "  " << e.u << " -- " << e.v;
        if (!everything_solid && !solid.count(e))
            out << " [style=dashed]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace sqroot
