// Acceptance suite: one check per release criterion, each printed as a
// single PASS/FAIL line. Exits nonzero when any criterion fails.

#include "sqroot/audit.hpp"
#include "sqroot/decomposition.hpp"
#include "sqroot/generators.hpp"
#include "sqroot/graph.hpp"
#include "sqroot/pathwidth.hpp"
#include "sqroot/recognizable.hpp"
#include "sqroot/solver.hpp"

#include "support/builders.hpp"
#include "support/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace sqroot;
using namespace sqroot::testing;

namespace {

struct Criterion {
    int id;
    const char* name;
    bool passed;
    std::string detail;
    double seconds;
};

std::vector<Criterion> results;

template <typename Fn>
void run(int id, const char* name, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = fn(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back({id, name, ok, detail, secs});
    std::printf("%-4s %2d %-28s %s (%.1fs)\n", ok ? "PASS" : "FAIL", id, name, detail.c_str(),
                secs);
    std::fflush(stdout);
}

// ---- shared helpers ------------------------------------------------------

std::vector<std::vector<Edge>> label_filter(const std::vector<std::vector<Edge>>& roots,
                                            const std::vector<Edge>& required,
                                            const std::vector<Edge>& forbidden) {
    std::vector<std::vector<Edge>> out;
    for (const auto& root : roots) {
        if (!std::includes(root.begin(), root.end(), required.begin(), required.end()))
            continue;
        bool hit = false;
        for (const Edge& e : forbidden)
            if (std::binary_search(root.begin(), root.end(), e))
                hit = true;
        if (!hit)
            out.push_back(root);
    }
    return out;
}

// Connected graphs on 1..6 vertices up to isomorphism, by canonical-form
// deduplication over all vertex permutations.
std::vector<Graph> connected_isomorphism_classes(int max_n) {
    std::vector<Graph> classes;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<Edge> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                pairs.emplace_back(u, v);
        const int bits = static_cast<int>(pairs.size());

        std::vector<int> perm(static_cast<std::size_t>(n));
        std::set<std::uint64_t> seen;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
            Graph g(n);
            for (int b = 0; b < bits; ++b)
                if ((mask >> b) & 1)
                    g.add_edge(pairs[static_cast<std::size_t>(b)].u,
                               pairs[static_cast<std::size_t>(b)].v);
            if (!is_connected(g) || (n > 1 && g.edge_count() == 0))
                continue;
            std::iota(perm.begin(), perm.end(), 0);
            std::uint64_t canonical = ~std::uint64_t{0};
            do {
                std::uint64_t relabeled = 0;
                for (int b = 0; b < bits; ++b) {
                    const Edge mapped(perm[static_cast<std::size_t>(pairs[static_cast<std::size_t>(b)].u)],
                                      perm[static_cast<std::size_t>(pairs[static_cast<std::size_t>(b)].v)]);
                    if (g.has_edge(mapped.u, mapped.v))
                        relabeled |= std::uint64_t{1} << b;
                }
                canonical = std::min(canonical, relabeled);
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (seen.insert(canonical).second) {
                Graph representative(n);
                for (int b = 0; b < bits; ++b)
                    if ((canonical >> b) & 1)
                        representative.add_edge(pairs[static_cast<std::size_t>(b)].u,
                                                pairs[static_cast<std::size_t>(b)].v);
                classes.push_back(std::move(representative));
            }
        }
    }
    return classes;
}

// ---- criteria ------------------------------------------------------------

bool criterion_1_oracle_equivalence(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    int mismatches = 0;

    const auto classes = connected_isomorphism_classes(6);
    // Known counts of connected graphs on 1..6 vertices.
    if (classes.size() != 1 + 1 + 2 + 6 + 21 + 112) {
        detail = "isomorphism-class enumeration produced " + std::to_string(classes.size()) +
                 " classes, expected 143";
        return false;
    }
    for (const Graph& g : classes) {
        const auto roots = brute_force_roots(g);
        const auto out = solve_labeled(LabeledInstance(g));
        if ((out.status == SolveStatus::Yes) != !roots.empty())
            ++mismatches;
        else if (!roots.empty() && *out.witness != roots.front())
            ++mismatches;
    }

    std::mt19937_64 rng(1000003);
    const int trials = 10000;
    for (int t = 0; t < trials; ++t) {
        const int n = 2 + static_cast<int>(uniform_below(rng, 13));
        const Graph g = random_graph(rng, n, 20);
        const auto roots = brute_force_roots(g);

        const auto plain = solve_labeled(LabeledInstance(g));
        if ((plain.status == SolveStatus::Yes) != !roots.empty() ||
            (!roots.empty() && *plain.witness != roots.front())) {
            ++mismatches;
            continue;
        }

        std::vector<Edge> required, forbidden;
        for (const Edge& e : g.edges()) {
            if (uniform_below(rng, 100) < 15)
                required.push_back(e);
            else if (uniform_below(rng, 100) < 15)
                forbidden.push_back(e);
        }
        const auto labeled = solve_labeled(LabeledInstance(g, required, forbidden));
        const auto survivors = label_filter(roots, required, forbidden);
        if ((labeled.status == SolveStatus::Yes) != !survivors.empty() ||
            (!survivors.empty() && *labeled.witness != survivors.front()))
            ++mismatches;
    }

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    detail = std::to_string(mismatches) + " mismatches over 143 classes + " +
             std::to_string(trials) + " random labeled graphs";
    return mismatches == 0 && secs < 600.0;
}

bool criterion_2_cut_vertex_and_c7(std::string& detail) {
    const auto p3 = solve_labeled(LabeledInstance(path(3)));
    if (p3.status != SolveStatus::No) {
        detail = "P3 did not come back NO";
        return false;
    }
    const Graph c7 = cycle(7);
    const auto roots = brute_force_roots(square(c7));
    if (roots.size() != 1 || roots[0] != c7.edges()) {
        detail = "square(C7) oracle did not return exactly E(C7)";
        return false;
    }
    const auto solved = solve_labeled(LabeledInstance(square(c7)));
    const auto piped = solve_max_deg5(square(c7));
    if (solved.status != SolveStatus::Yes || *solved.witness != c7.edges() ||
        piped.status != SolveStatus::Yes || *piped.witness != c7.edges()) {
        detail = "solver did not return E(C7)";
        return false;
    }
    detail = "P3 NO; square(C7) has the unique root E(C7)";
    return true;
}

constexpr int kLemma3Instances = 200;

std::vector<PlantedInstance> planted_deg5_corpus() {
    std::vector<PlantedInstance> corpus;
    corpus.reserve(kLemma3Instances);
    for (int i = 0; i < kLemma3Instances; ++i)
        corpus.push_back(planted(10000 + static_cast<std::uint64_t>(i), 3 + (i % 38),
                                 DegreeProfile::AtMost5));
    return corpus;
}

bool criterion_3_lemma3_constants(std::string& detail) {
    int worst_width = 0;
    int worst_triple = 0;
    for (const PlantedInstance& inst : planted_deg5_corpus()) {
        for (int source = 0; source < inst.root.vertex_count(); ++source) {
            const auto pd = bfs_triple_decomposition(inst.root, source);
            if (!validate_path_decomposition(inst.square, pd)) {
                detail = "invalid decomposition (seed " + std::to_string(inst.seed) + ")";
                return false;
            }
            worst_width = std::max(worst_width, pd.width());
            const auto layers = bfs_layering(inst.root, source);
            const int s = layers.eccentricity();
            for (int i = 0; i <= s; ++i) {
                int triple = 0;
                for (int j = i; j <= std::min(i + 2, s); ++j)
                    triple += static_cast<int>(layers.levels[static_cast<std::size_t>(j)].size());
                worst_triple = std::max(worst_triple, triple);
            }
        }
    }
    detail = std::to_string(kLemma3Instances) + " instances, all sources: max width " +
             std::to_string(worst_width) + " <= 27, max triple level " +
             std::to_string(worst_triple) + " <= 28";
    return worst_width <= 27 && worst_triple <= 28;
}

bool criterion_4_claim_a_audit(std::string& detail) {
    int audits = 0;
    int max_children = 0, max_desc = 0;
    for (const PlantedInstance& inst : planted_deg5_corpus()) {
        for (int source = 0; source < inst.root.vertex_count(); ++source) {
            const auto report = audit_deg5_root(inst.root, source);
            ++audits;
            if (!report.applicable || !report.violations.empty()) {
                detail = "violation or inapplicable audit (seed " + std::to_string(inst.seed) +
                         ", source " + std::to_string(source) + ")";
                return false;
            }
            max_children = std::max(max_children, report.max_tree_children);
            max_desc = std::max(max_desc, report.max_descendants);
        }
    }
    detail = std::to_string(audits) + " audits clean; max tree children " +
             std::to_string(max_children) + " <= 3, max pair descendants " +
             std::to_string(max_desc) + " <= 4";
    return true;
}

bool criterion_5_lemma6_constants(std::string& detail) {
    const int instances = 500;
    int applicable = 0;
    int max_seen_n = 0, max_seen_s = 0;
    for (int i = 0; i < instances; ++i) {
        const PlantedInstance inst =
            planted(50000 + static_cast<std::uint64_t>(i), 3 + (i % 38), DegreeProfile::AtMost6);
        const auto report = audit_deg6_instance(inst.root);
        if (!report.applicable)
            continue;
        ++applicable;
        if (!report.violations.empty()) {
            detail = "violations on seed " + std::to_string(inst.seed) + ": " +
                     report.violations.front().claim;
            return false;
        }
        max_seen_n = std::max(max_seen_n, inst.root.vertex_count());
        max_seen_s = std::max(max_seen_s, report.source_eccentricity);
    }
    detail = std::to_string(applicable) + "/" + std::to_string(instances) +
             " applicable, all clean; max |V| " + std::to_string(max_seen_n) +
             " <= 103, max s " + std::to_string(max_seen_s) + " <= 8";
    return applicable > 0;
}

bool criterion_6_ladder_remark(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    for (int n = 5; n <= 200; ++n) {
        const Graph g = square(ladder(n));
        if (max_degree(g) != 7) {
            detail = "ladder(" + std::to_string(n) + ") square has degree != 7";
            return false;
        }
        if (find_recognizable_edge(g)) {
            detail = "ladder(" + std::to_string(n) + ") square has a recognizable edge";
            return false;
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    detail = "ladders 5..200: degree exactly 7, zero recognizable edges";
    return secs < 60.0;
}

bool criterion_7_wall_remark(std::string& detail) {
    for (int h = 2; h <= 6; ++h) {
        const Graph g = square(subdivide(wall(h)));
        if (max_degree(g) > 6) {
            detail = "wall(" + std::to_string(h) + ") squared subdivision exceeds degree 6";
            return false;
        }
        if (g.vertex_count() > 103 && !find_recognizable_edge(g)) {
            detail = "wall(" + std::to_string(h) +
                     ") squared subdivision is recognizable-edge-free above 103 vertices";
            return false;
        }
    }
    detail = "walls 2..6: degree <= 6; every instance above 103 vertices has a witness";
    return true;
}

bool criterion_8_detector_equivalence(std::string& detail) {
    long long compared = 0;
    // Exhaustive over all labeled graphs on up to 5 vertices.
    for (int n = 2; n <= 5; ++n) {
        std::vector<Edge> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                pairs.emplace_back(u, v);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
            Graph g(n);
            for (std::size_t b = 0; b < pairs.size(); ++b)
                if ((mask >> b) & 1)
                    g.add_edge(pairs[b].u, pairs[b].v);
            for (const Edge& e : g.edges()) {
                ++compared;
                const auto fast = recognizable_partition(g, e.u, e.v);
                const auto slow = naive_recognizable_partition(g, e.u, e.v);
                if (fast.has_value() != slow.has_value() ||
                    (fast && (fast->x != slow->x || fast->y != slow->y))) {
                    detail = "mismatch on an exhaustive graph, n=" + std::to_string(n);
                    return false;
                }
            }
        }
    }
    std::mt19937_64 rng(88001);
    for (int t = 0; t < 10000; ++t) {
        const int n = 2 + static_cast<int>(uniform_below(rng, 7));
        const Graph g = random_graph(rng, n, n * (n - 1) / 2);
        for (const Edge& e : g.edges()) {
            ++compared;
            const auto fast = recognizable_partition(g, e.u, e.v);
            const auto slow = naive_recognizable_partition(g, e.u, e.v);
            if (fast.has_value() != slow.has_value() ||
                (fast && (fast->x != slow->x || fast->y != slow->y))) {
                detail = "mismatch on a random graph, trial " + std::to_string(t);
                return false;
            }
        }
    }
    detail = "0 mismatches over " + std::to_string(compared) + " edges";
    return true;
}

bool criterion_9_pipeline_round_trips(std::string& detail) {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        for (const bool deg5 : {true, false}) {
            const PlantedInstance inst =
                planted(90000 + static_cast<std::uint64_t>(i) * 2 + (deg5 ? 0 : 1),
                        4 + (i % 37), deg5 ? DegreeProfile::AtMost5 : DegreeProfile::AtMost6);
            const auto start = std::chrono::steady_clock::now();
            const SolveOutcome out =
                deg5 ? solve_max_deg5(inst.square) : solve_max_deg6(inst.square);
            const double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            worst = std::max(worst, secs);
            if (secs >= 30.0) {
                detail = "instance exceeded 30s (seed " + std::to_string(inst.seed) + ")";
                return false;
            }
            if (out.status != SolveStatus::Yes ||
                !verify_outcome(inst.square, {}, {}, out)) {
                detail = "pipeline failed on seed " + std::to_string(inst.seed);
                return false;
            }
            const auto general = solve_labeled(LabeledInstance(inst.square));
            if (general.status != out.status) {
                detail = "pipeline and general solver disagree on seed " +
                         std::to_string(inst.seed);
                return false;
            }
        }
    }
    detail = "200 pipeline round trips verified; slowest instance " +
             std::to_string(worst) + "s < 30s";
    return true;
}

bool criterion_10_pathwidth_engine(std::string& detail) {
    for (int k = 2; k <= 8; ++k) {
        if (pathwidth_at_most(complete(k), k - 1).answer != Ternary::Yes ||
            pathwidth_at_most(complete(k), k - 2).answer != Ternary::No) {
            detail = "pw(K_" + std::to_string(k) + ") != " + std::to_string(k - 1);
            return false;
        }
    }
    std::mt19937_64 rng(424243);
    for (int t = 0; t < 1000; ++t) {
        const int n = 1 + static_cast<int>(uniform_below(rng, 8));
        const Graph g = random_graph(rng, n, n * (n - 1) / 2);
        const int exact = pathwidth_by_layouts(g);
        for (int k = 0; k < n; ++k) {
            const auto result = pathwidth_at_most(g, k);
            if (result.answer == Ternary::Undecided ||
                (result.answer == Ternary::Yes) != (exact <= k)) {
                detail = "mismatch vs layout oracle on trial " + std::to_string(t);
                return false;
            }
            if (result.answer == Ternary::Yes &&
                (!result.decomposition || result.decomposition->width() > k ||
                 !validate_path_decomposition(g, *result.decomposition))) {
                detail = "yes answer without a valid decomposition, trial " + std::to_string(t);
                return false;
            }
        }
    }
    detail = "cliques k<=8 exact; 1000 random graphs match the layout oracle";
    return true;
}

}  // namespace

int main() {
    run(1, "oracle-equivalence", criterion_1_oracle_equivalence);
    run(2, "cut-vertex-and-c7", criterion_2_cut_vertex_and_c7);
    run(3, "triple-level-decomposition", criterion_3_lemma3_constants);
    run(4, "bfs-tree-claim-audit", criterion_4_claim_a_audit);
    run(5, "size-bound-audits", criterion_5_lemma6_constants);
    run(6, "ladder-family", criterion_6_ladder_remark);
    run(7, "subdivided-wall-family", criterion_7_wall_remark);
    run(8, "detector-equivalence", criterion_8_detector_equivalence);
    run(9, "pipeline-round-trips", criterion_9_pipeline_round_trips);
    run(10, "pathwidth-engine", criterion_10_pathwidth_engine);

    int failed = 0;
    for (const Criterion& c : results)
        failed += c.passed ? 0 : 1;
    if (failed == 0) {
        std::printf("all %zu criteria passed\n", results.size());
        return 0;
    }
    std::printf("%d criteria FAILED\n", failed);
    return 1;
}
