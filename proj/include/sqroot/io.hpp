#pragma once

#include "sqroot/graph.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sqroot {

/// Malformed input; `offset` is the byte position of the first bad byte.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : std::runtime_error(message + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// graph6: standard ASCII encoding for simple graphs (n < 2^36).
/// An optional ">>graph6<<" header and trailing newline are accepted.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// Plain edge list: "n m" header line, then m lines "u v".
Graph parse_edgelist(std::string_view text);
std::string emit_edgelist(const Graph& g);

/// DOT output; edges in `highlighted` are drawn solid, the rest dashed.
/// With no highlight set every edge is solid.
std::string emit_dot(const Graph& g, const std::vector<Edge>& highlighted = {});

}  // namespace sqroot
