#pragma once

#include "sqroot/graph.hpp"

#include <cstdint>
#include <random>

namespace sqroot {

/// Degree class of the squared instance a planted generator must hit.
enum class DegreeProfile {
    AtMost5,
    AtMost6,
    Exactly7,
    Unbounded,
};

const char* to_string(DegreeProfile p);

/// Brick-wall graph of the given height (h >= 2). Rows are indexed bottom
/// to top; vertex ids are row-major within each row. Row y holds columns
/// 0..2h+1 except that the bottom row drops column 0 and the top row drops
/// one end (column 2h+1 for even h, column 0 for odd h). Vertical edges sit
/// at columns of parity (y+1) mod 2. Heights 2..4 reproduce the classic
/// drawings; larger heights extrapolate the same parity rule.
Graph wall(int height);

/// Replace every edge uw by a path u-v-w through a fresh midpoint v.
/// Original ids are preserved; midpoints are appended in canonical edge
/// order, so edge k of g gets midpoint n+k.
Graph subdivide(const Graph& g);

/// Two paths u_1..u_n and v_1..v_n joined by rungs u_i v_i.
/// u_i = i-1 and v_i = n+i-1; 2n vertices, 3n-2 edges.
Graph ladder(int rungs);

/// Ground-truth YES instance: a root graph together with its square.
struct PlantedInstance {
    Graph root;
    Graph square;
    DegreeProfile profile = DegreeProfile::Unbounded;
    std::uint64_t seed = 0;
};

/// Seeded construction of a random connected root whose square matches the
/// requested degree profile, via degree-aware random growth plus extra
/// edges. Identical output for identical (seed, n, profile). Throws
/// std::runtime_error when the retry budget is exhausted.
PlantedInstance planted(std::uint64_t seed, int n, DegreeProfile profile);

/// Bounded uniform draw in [0, bound) that does not depend on the standard
/// library's distribution implementation, so results are identical across
/// platforms. All randomized code in this project goes through this.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace sqroot
