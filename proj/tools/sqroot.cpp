#include "sqroot/audit.hpp"
#include "sqroot/decomposition.hpp"
#include "sqroot/generators.hpp"
#include "sqroot/graph.hpp"
#include "sqroot/io.hpp"
#include "sqroot/pathwidth.hpp"
#include "sqroot/recognizable.hpp"
#include "sqroot/solver.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace sqroot;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;
constexpr int kExitUndecided = 3;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Graph read_graph(const std::string& path, const std::string& format) {
    const std::string text = slurp(path);
    if (format == "graph6")
        return parse_graph6(text);
    if (format == "edgelist")
        return parse_edgelist(text);
    throw std::runtime_error("unknown format " + format);
}

std::string render_graph(const Graph& g, const std::string& format) {
    if (format == "graph6")
        return emit_graph6(g) + "\n";
    if (format == "edgelist")
        return emit_edgelist(g);
    throw std::runtime_error("unknown format " + format);
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
}

void maybe_emit_dot(const std::string& path, const Graph& g, const std::vector<Edge>& solid) {
    if (path.empty())
        return;
    write_output(path, emit_dot(g, solid));
}

// Pipeline selection by maximum degree.
SolveOutcome dispatch_solve(const Graph& g, const SolveOptions& opts) {
    const int delta = max_degree(g);
    if (delta <= 5)
        return solve_max_deg5(g, opts);
    if (delta <= 6)
        return solve_max_deg6(g, opts);
    return solve_labeled(LabeledInstance(g), opts);
}

// NO-certificates that work without any search, for graphs too large to
// hand to the solver.
std::optional<SolveOutcome> certificate_only(const Graph& g) {
    const int delta = max_degree(g);
    if (delta > 6)
        return std::nullopt;
    for (const auto& comp : components(g)) {
        const Graph sub = induced_subgraph(g, comp);
        if (delta <= 5 && comp.size() > 28) {
            const int lb = pathwidth_lower_bound(sub);
            if (lb > 27) {
                SolveOutcome out;
                out.status = SolveStatus::No;
                out.certificate =
                    NoCertificate{CertificateKind::PathwidthExceeded, comp, lb,
                                  "certified pathwidth lower bound " + std::to_string(lb)};
                return out;
            }
        }
        if (comp.size() > 103 && !find_recognizable_edge(sub)) {
            SolveOutcome out;
            out.status = SolveStatus::No;
            out.certificate = NoCertificate{CertificateKind::SizeBoundExceeded, comp, -1,
                                            std::to_string(comp.size()) + " vertices > 103"};
            return out;
        }
    }
    return std::nullopt;
}

int run_solve(const Graph& g, const SolveOptions& opts, int vertex_cap,
              const std::string& dot_path) {
    if (g.vertex_count() > vertex_cap) {
        if (auto certified = certificate_only(g)) {
            std::cout << "STATUS NO\n"
                      << "CERTIFICATE " << to_string(certified->certificate->kind) << " | "
                      << certified->certificate->detail << "\n";
            return kExitNo;
        }
        std::cerr << "solve: graph has " << g.vertex_count()
                  << " vertices (cap " << vertex_cap
                  << ") and no cheap certificate resolves it; raise --vertex-cap\n";
        return kExitError;
    }

    const SolveOutcome out = dispatch_solve(g, opts);
    std::cout << "STATUS " << to_string(out.status) << "\n";
    switch (out.status) {
        case SolveStatus::Yes: {
            std::cout << "ROOT " << out.witness->size() << "\n";
            for (const Edge& e : *out.witness)
                std::cout << e.u << ' ' << e.v << "\n";
            maybe_emit_dot(dot_path, g, *out.witness);
            return kExitYes;
        }
        case SolveStatus::No:
            std::cout << "CERTIFICATE " << to_string(out.certificate->kind);
            if (!out.certificate->detail.empty())
                std::cout << " | " << out.certificate->detail;
            std::cout << "\n";
            return kExitNo;
        case SolveStatus::Undecided:
            std::cout << "BUDGET exhausted after " << out.stats.nodes << " nodes\n";
            return kExitUndecided;
    }
    return kExitError;
}

int run_bench(const std::string& family, int min_n, int max_n, int step,
              const SolveOptions& opts, std::uint64_t seed) {
    std::cout << "family\tparam\tn\tm\tdelta\tstatus\tcertificate\tnodes\tms\n";
    for (int param = min_n; param <= max_n; param += step) {
        Graph root;
        if (family == "ladder")
            root = ladder(param);
        else if (family == "wall")
            root = wall(param);
        else if (family == "subdivided-wall")
            root = subdivide(wall(param));
        else if (family == "planted")
            root = planted(seed + static_cast<std::uint64_t>(param), param,
                           DegreeProfile::AtMost6)
                       .root;
        else
            throw std::runtime_error("unknown family " + family);
        const Graph g = square(root);

        const auto start = std::chrono::steady_clock::now();
        const SolveOutcome out = dispatch_solve(g, opts);
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        std::cout << family << '\t' << param << '\t' << g.vertex_count() << '\t'
                  << g.edge_count() << '\t' << max_degree(g) << '\t' << to_string(out.status)
                  << '\t' << (out.certificate ? to_string(out.certificate->kind) : "-") << '\t'
                  << out.stats.nodes << '\t' << static_cast<long long>(ms) << "\n";
    }
    return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact square-root solver toolkit for low-degree graphs"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string format = "graph6";
    std::string output;
    std::string dot_path;
    std::uint64_t node_budget = 0;
    double time_budget = 0.0;
    std::uint64_t seed = 1;
    int threads = 1;
    bool deterministic = false;
    int vertex_cap = 5000;

    app.add_option("--input", input, "input path, or - for stdin")->capture_default_str();
    app.add_option("--format", format, "graph6 | edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}))
        ->capture_default_str();
    app.add_option("--output", output, "output path, - for stdout");
    app.add_option("--node-budget", node_budget, "search node limit (0 = unlimited)");
    app.add_option("--time-budget", time_budget, "wall-clock limit in seconds (0 = none)");
    app.add_option("--seed", seed, "generator seed")->capture_default_str();
    app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--deterministic", deterministic, "force single-threaded search");
    app.add_option("--emit-dot", dot_path, "also write a DOT rendering to this path");

    auto* cmd_square = app.add_subcommand("square", "read a graph H, write its square");
    auto* cmd_solve =
        app.add_subcommand("solve", "decide whether the input graph has a square root");
    cmd_solve->add_option("--vertex-cap", vertex_cap,
                          "refuse searches above this many vertices")
        ->capture_default_str();

    std::string root_path, square_path;
    auto* cmd_check = app.add_subcommand("check-root", "check whether H squares to G");
    cmd_check->add_option("H", root_path, "candidate root")->required();
    cmd_check->add_option("G", square_path, "target graph")->required();

    bool apply_square = false;
    auto* cmd_recognizable =
        app.add_subcommand("recognizable", "list all recognizable edges with witnesses");
    cmd_recognizable->add_flag("--square", apply_square, "square the input graph first");

    int audit_source = 0;
    auto* cmd_certify =
        app.add_subcommand("certify", "run the structural audits on a candidate root");
    cmd_certify->add_option("--source", audit_source, "BFS source for the deg-5 audit")
        ->capture_default_str();

    std::string family = "ladder";
    int gen_n = 10, height = 2;
    std::string profile_name = "le6";
    bool gen_square = false;
    auto* cmd_gen = app.add_subcommand("gen", "generate a graph family member");
    cmd_gen->add_option("family", family, "wall | subdivided-wall | ladder | planted")
        ->required()
        ->check(CLI::IsMember({"wall", "subdivided-wall", "ladder", "planted"}));
    cmd_gen->add_option("--n", gen_n, "rung count / vertex count")->capture_default_str();
    cmd_gen->add_option("--height", height, "wall height")->capture_default_str();
    cmd_gen->add_option("--profile", profile_name, "le5 | le6 | eq7 | unbounded")
        ->check(CLI::IsMember({"le5", "le6", "eq7", "unbounded"}))
        ->capture_default_str();
    cmd_gen->add_flag("--square", gen_square, "emit the square instead of the root");

    std::string bench_family = "ladder";
    int bench_min = 5, bench_max = 50, bench_step = 5;
    auto* cmd_bench = app.add_subcommand("bench", "timed solve sweep over a family");
    cmd_bench->add_option("--family", bench_family, "ladder | wall | subdivided-wall | planted")
        ->capture_default_str();
    cmd_bench->add_option("--min-n", bench_min, "first size")->capture_default_str();
    cmd_bench->add_option("--max-n", bench_max, "last size")->capture_default_str();
    cmd_bench->add_option("--step", bench_step, "size increment")->check(CLI::PositiveNumber)
        ->capture_default_str();

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    SolveOptions opts;
    opts.node_budget = node_budget == 0 ? kNoNodeLimit : node_budget;
    opts.time_budget_seconds = time_budget;
    opts.threads = deterministic ? 1 : threads;

    try {
        if (cmd_square->parsed()) {
            const Graph h = read_graph(input, format);
            const Graph g = square(h);
            write_output(output, render_graph(g, format));
            maybe_emit_dot(dot_path, g, h.edges());
            return kExitYes;
        }
        if (cmd_solve->parsed()) {
            return run_solve(read_graph(input, format), opts, vertex_cap, dot_path);
        }
        if (cmd_check->parsed()) {
            const Graph h = read_graph(root_path, format);
            const Graph g = read_graph(square_path, format);
            const bool ok = is_square_root(h, g);
            std::cout << (ok ? "true" : "false") << "\n";
            return ok ? kExitYes : kExitNo;
        }
        if (cmd_recognizable->parsed()) {
            Graph g = read_graph(input, format);
            if (apply_square)
                g = square(g);
            for (const auto& [edge, witness] : find_all_recognizable_edges(g))
                std::cout << to_string(witness) << "\n";
            return kExitYes;
        }
        if (cmd_certify->parsed()) {
            const Graph h = read_graph(input, format);
            if (audit_source < 0 || audit_source >= h.vertex_count())
                throw std::runtime_error("certify: --source out of range");
            std::cout << "== deg5 audit (source " << audit_source << ") ==\n"
                      << audit_deg5_root(h, audit_source).to_text();
            std::cout << "== deg6 audit ==\n" << audit_deg6_instance(h).to_text();
            if (is_connected(h)) {
                const auto pd = bfs_triple_decomposition(h, audit_source);
                std::cout << "triple-decomposition-width: " << pd.width() << "\n";
            }
            std::cout << "square-pathwidth-lower-bound: "
                      << pathwidth_lower_bound(square(h)) << "\n";
            return kExitYes;
        }
        if (cmd_gen->parsed()) {
            Graph g;
            if (family == "wall")
                g = wall(height);
            else if (family == "subdivided-wall")
                g = subdivide(wall(height));
            else if (family == "ladder")
                g = ladder(gen_n);
            else {
                const DegreeProfile profile = profile_name == "le5" ? DegreeProfile::AtMost5
                                              : profile_name == "le6" ? DegreeProfile::AtMost6
                                              : profile_name == "eq7" ? DegreeProfile::Exactly7
                                                                      : DegreeProfile::Unbounded;
                g = planted(seed, gen_n, profile).root;
            }
            if (gen_square)
                g = square(g);
            write_output(output, render_graph(g, format));
            maybe_emit_dot(dot_path, g, {});
            return kExitYes;
        }
        if (cmd_bench->parsed()) {
            return run_bench(bench_family, bench_min, bench_max, bench_step, opts, seed);
        }
    } catch (const std::exception& e) {
        std::cerr << "sqroot: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
