#pragma once

#include "sqroot/graph.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace sqroot {

enum class SolveStatus {
    Yes,
    No,
    Undecided,
};

enum class CertificateKind {
    PathwidthExceeded,
    SizeBoundExceeded,
    LabelContradiction,
    ExhaustedSearch,
};

const char* to_string(SolveStatus s);
const char* to_string(CertificateKind k);

/// Machine-checkable reason for a NO answer.
struct NoCertificate {
    CertificateKind kind = CertificateKind::ExhaustedSearch;
    std::vector<int> component;  // vertices the certificate talks about
    int bound_value = -1;        // certified pathwidth lower bound, when that route fired
    std::string detail;
};

struct SolveStats {
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::Undecided;
    std::optional<std::vector<Edge>> witness;    // present iff Yes
    std::optional<NoCertificate> certificate;    // present iff No
    SolveStats stats;
};

inline constexpr std::uint64_t kNoNodeLimit = std::numeric_limits<std::uint64_t>::max();

/// Knobs for the backtracking search. The four pruning rules are each
/// individually sound; disabling any of them changes node counts but never
/// answers. Runs with the same options are deterministic for any thread
/// count as long as no budget is exhausted; node budgets stay deterministic
/// because the search is split into fixed slices, while time budgets are a
/// wall-clock safety net.
struct SolveOptions {
    std::uint64_t node_budget = kNoNodeLimit;
    double time_budget_seconds = 0.0;  // 0 disables the clock
    int threads = 1;

    bool prune_closure = true;     // decided-in edges may not create a distance-2 non-edge
    bool prune_coverage = true;    // every edge of g must stay coverable within distance 2
    bool prune_degree_cap = true;  // |radius-2 ball in H| can never exceed |N_G[v]|
    bool prune_unit = true;        // an edge whose exclusion kills coverage is forced in
};

/// Complete backtracking over spanning subgraphs of g (minus forbidden
/// edges, with required edges pre-assigned), per component, in canonical
/// edge order. Yes answers return the lexicographically least witness
/// under the fixed order (edge absent sorts before edge present, scanning
/// edges canonically).
SolveOutcome solve_labeled(const LabeledInstance& inst, const SolveOptions& opts = {});

/// Independent oracle: enumerates all 2^|E| spanning subgraphs and returns
/// every square root, in the same canonical subset order the solver uses.
/// Refuses graphs with more than max_edges edges.
std::vector<std::vector<Edge>> brute_force_roots(const Graph& g, int max_edges = 22);

/// Decision pipeline for max degree <= 5: a certified pathwidth bound
/// above 27 on any component is a NO-certificate; otherwise the exact
/// search runs. Throws when the degree bound is violated.
SolveOutcome solve_max_deg5(const Graph& g, const SolveOptions& opts = {});

/// Decision pipeline for max degree <= 6: a component with no recognizable
/// edges and more than 103 vertices is a NO-certificate; otherwise the
/// exact search runs. Throws when the degree bound is violated.
SolveOutcome solve_max_deg6(const Graph& g, const SolveOptions& opts = {});

/// Independent re-check of an outcome: Yes witnesses are squared and
/// tested against g and the labels; pathwidth and size certificates have
/// their hypotheses re-derived; exhausted-search NOs are cross-checked
/// against the brute-force oracle when |E| <= 22.
bool verify_outcome(const Graph& g, const std::vector<Edge>& required,
                    const std::vector<Edge>& forbidden, const SolveOutcome& out);

}  // namespace sqroot
