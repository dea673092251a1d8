#pragma once

#include "sqroot/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sqroot {

struct AuditViolation {
    std::string claim;          // e.g. "claim-A-i", "size-103"
    std::vector<int> witness;   // vertices involved
    std::string detail;
};

/// Outcome of a structural audit. When the instance does not meet the
/// audit's hypotheses, `applicable` is false and the checks are skipped
/// (that is a result, not an error). An applicable report with no
/// violations means every checked claim held on this instance.
struct AuditReport {
    bool applicable = false;
    std::string inapplicable_reason;
    std::vector<std::string> checked_claims;  // every claim this audit ran
    std::vector<AuditViolation> violations;
    std::vector<std::string> notes;   // informational, not violations

    // Observed statistics, for empirical-slack reporting.
    std::vector<int> level_sizes;
    int source_eccentricity = -1;
    int max_triple_level_size = 0;
    int max_tree_children = 0;
    int max_descendants = 0;

    bool clean() const { return applicable && violations.empty(); }
    std::string to_text() const;
};

/// Structural audit of a root h whose square has maximum degree at most 5,
/// over the canonical BFS tree from `source`: every vertex at level >= 2
/// has at most three tree children and at most four tree descendants in
/// any two consecutive deeper levels L_j ∪ L_{j+1} (j < s), and every
/// three consecutive levels hold at most 28 vertices.
AuditReport audit_deg5_root(const Graph& h, int source);

/// Structural audit of a root h whose square has maximum degree at most 6
/// and no recognizable edges. Levels are taken from the lexicographically
/// least vertex pair realizing the diameter s of h; parent/child is the
/// full between-level relation (a vertex may have several parents).
/// Checks: grandchildren funnel through a single child (claim A), at most
/// four level-monotone descendants in every deeper level (claim B), unique
/// children/parents along a canonical shortest diameter path (claims C/D),
/// s <= 8, and at most 103 vertices.
AuditReport audit_deg6_instance(const Graph& h);

/// Certificate that a connected graph with max degree <= 6 and no
/// recognizable edges has no square root because it has more than 103
/// vertices. Hypotheses are re-verified; violating them is an error
/// naming the failed hypothesis. Returns nullopt when |V| <= 103.
struct SizeCertificate {
    int vertex_count = 0;
};

std::optional<SizeCertificate> size_certificate_deg6(const Graph& g);

}  // namespace sqroot
