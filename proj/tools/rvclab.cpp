// rvclab — construct edge-corona graphs, verify rainbow/locating colorings,
// compute exact rvc/rvcl values, generate the built-in constructive
// colorings, and cross-check predicted values against the exact solver.
//
// Exit codes: 0 success, 1 logic failure (invalid coloring, MISMATCH or
// CONSTRUCTION_FAILS row), 2 usage or contract error, 3 budget exhausted.

#include "rvclab/errors.hpp"
#include "rvclab/json_io.hpp"
#include "rvclab/reproduce.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace rvclab;

constexpr int kRvclSizeCap = 18;
constexpr int kRvcSizeCap = 24;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw InvalidParameter("cannot open output file: " + out_path);
    out << text;
}

std::vector<std::pair<int, int>> parse_edge_list(const std::string& text) {
    std::vector<std::pair<int, int>> edges;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto dash = item.find('-');
        if (dash == std::string::npos)
            throw InvalidParameter("edges look like 1-2,1-3");
        edges.push_back({std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1))});
    }
    if (edges.empty())
        throw InvalidParameter("empty edge list");
    return edges;
}

// family:size strings, e.g. path:4, cycle:5, complete:3
Graph parse_family(const std::string& text, const std::string& edges) {
    if (text == "tree") {
        if (edges.empty())
            throw InvalidParameter("tree core needs --edges");
        return Graph::tree(parse_edge_list(edges));
    }
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw InvalidParameter("family spec looks like path:4, cycle:5, complete:3 or tree");
    std::string family = text.substr(0, colon);
    int size = std::stoi(text.substr(colon + 1));
    if (family == "path")
        return Graph::path(size);
    if (family == "cycle")
        return Graph::cycle(size);
    if (family == "complete")
        return Graph::complete(size);
    throw InvalidParameter("unknown family: " + family);
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InvalidParameter("cannot open graph file: " + path);
    nlohmann::json j;
    in >> j;
    return graph_from_json(j);
}

void parse_range(const std::string& text, std::optional<int>& lo, std::optional<int>& hi) {
    if (text.empty())
        return;
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        lo = hi = std::stoi(text);
        return;
    }
    lo = std::stoi(text.substr(0, dots));
    hi = std::stoi(text.substr(dots + 2));
}

int cmd_construct(const std::string& core_spec, const std::string& edges,
                  const std::string& flare_spec, const std::string& format,
                  const std::string& out) {
    Graph core = parse_family(core_spec, edges);
    Graph g = flare_spec.empty() ? core : edge_corona(core, parse_family(flare_spec, ""));
    if (format == "dot")
        write_output(graph_to_dot(g), out);
    else
        write_output(graph_to_json(g).dump(2) + "\n", out);
    return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path) {
    Graph g = load_graph(graph_path);
    std::ifstream in(coloring_path);
    if (!in)
        throw InvalidParameter("cannot open coloring file: " + coloring_path);
    nlohmann::json j;
    in >> j;
    VertexColoring c = coloring_from_json(j, g);
    VerificationReport report = is_locating_rainbow_coloring(g, c);
    std::cout << report_to_json(report).dump(2) << "\n";
    return report.all_ok() ? 0 : 1;
}

int cmd_solve(const std::string& graph_path, const std::string& target_name,
              std::uint64_t budget_nodes, double budget_seconds, int workers, bool force,
              const std::string& out) {
    Graph g = load_graph(graph_path);
    Target target = target_from_string(target_name);
    int cap = target == Target::Rvcl ? kRvclSizeCap : kRvcSizeCap;
    if (g.vertex_count() > cap && !force) {
        std::cerr << "graph has " << g.vertex_count() << " vertices, above the " << cap
                  << "-vertex cap for " << target_name << "; pass --force to search anyway\n";
        return 2;
    }
    SearchBudget budget;
    budget.max_nodes_per_level = budget_nodes;
    budget.max_seconds_total = budget_seconds;
    SearchOptions options;
    options.workers = workers;
    SolveResult result = solve_exact(g, target, budget, options);
    write_output(solve_result_to_json(result).dump(2) + "\n", out);
    return result.status == SolveStatus::Proved ? 0 : 3;
}

int cmd_color(const std::string& rule, int m, int n, const std::string& edges,
              const std::string& core_spec, const std::string& flare_spec,
              const std::string& out) {
    auto flare = [&]() {
        return flare_spec.empty() ? Graph::complete(n) : parse_family(flare_spec, "");
    };
    VertexColoring c = [&]() {
        if (rule == "upper-general") {
            if (core_spec.empty())
                throw InvalidParameter("upper-general needs --core");
            return color_upper_general(parse_family(core_spec, edges), n);
        }
        if (rule == "tree-rvc") {
            if (edges.empty())
                throw InvalidParameter("tree-rvc needs --edges");
            return color_tree_rvc(Graph::tree(parse_edge_list(edges)), flare());
        }
        if (rule == "path-rvcl")
            return color_path_rvcl(m, n);
        if (rule == "cycle-rvc")
            return color_cycle_rvc(m, flare());
        if (rule == "cycle-rvcl")
            return color_cycle_rvcl(m, n);
        if (rule == "complete-rvc")
            return color_complete_rvc(m, flare());
        if (rule == "complete-rvcl")
            return color_complete_rvcl(m, n);
        throw InvalidParameter("unknown rule: " + rule);
    }();
    write_output(coloring_to_json(c).dump(2) + "\n", out);
    return 0;
}

int cmd_reproduce(const std::string& theorem, const std::string& m_range,
                  const std::string& n_range, const std::string& format,
                  std::uint64_t budget_nodes, double budget_seconds, int workers, bool force,
                  const std::string& out) {
    ReproduceOptions options;
    parse_range(m_range, options.m_lo, options.m_hi);
    parse_range(n_range, options.n_lo, options.n_hi);
    options.force = force;
    options.budget.max_nodes_per_level = budget_nodes;
    options.budget.max_seconds_total = budget_seconds;
    options.workers = workers;
    options.rvcl_cap = kRvclSizeCap;
    options.rvc_cap = kRvcSizeCap;
    auto rows = reproduce_theorem(theorem, options);
    if (format == "json")
        write_output(rows_to_json(rows).dump(2) + "\n", out);
    else
        write_output(rows_to_csv(rows), out);
    return rows_all_green(rows) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rainbow-vertex coloring toolkit for edge-corona graphs"};
    app.require_subcommand(1);

    std::string core_spec, flare_spec, edges, format = "json", rformat = "csv", out;
    std::string graph_path, coloring_path;
    std::string target_name, rule, theorem, m_range, n_range;
    int m = 0, n = 0, workers = 1;
    std::uint64_t budget_nodes = SearchBudget{}.max_nodes_per_level;
    double budget_seconds = SearchBudget{}.max_seconds_total;
    bool force = false;

    auto* construct = app.add_subcommand("construct", "build a graph and write JSON or DOT");
    construct->add_option("--core", core_spec, "core family, e.g. path:3 or tree")->required();
    construct->add_option("--edges", edges, "tree edge list, e.g. 1-2,1-3");
    construct->add_option("--flare", flare_spec, "flare family, e.g. complete:2");
    construct->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
    construct->add_option("--out", out, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "check a coloring for both properties");
    verify->add_option("graph", graph_path)->required();
    verify->add_option("coloring", coloring_path)->required();

    auto* solve = app.add_subcommand("solve", "exact rvc/rvcl by canonical search");
    solve->add_option("graph", graph_path)->required();
    solve->add_option("--target", target_name)->required()->check(CLI::IsMember({"rvc", "rvcl"}));
    solve->add_option("--budget-nodes", budget_nodes, "node cap per ladder level");
    solve->add_option("--budget-seconds", budget_seconds, "wall-clock cap");
    solve->add_option("--workers", workers);
    solve->add_flag("--force", force, "search past the size cap");
    solve->add_option("--out", out);

    auto* color = app.add_subcommand("color", "emit a built-in constructive coloring");
    color->add_option("--rule", rule)
        ->required()
        ->check(CLI::IsMember({"upper-general", "tree-rvc", "path-rvcl", "cycle-rvc",
                               "cycle-rvcl", "complete-rvc", "complete-rvcl"}));
    color->add_option("--m", m);
    color->add_option("--n", n);
    color->add_option("--edges", edges, "tree edge list for tree-rvc");
    color->add_option("--core", core_spec, "core family for upper-general");
    color->add_option("--flare", flare_spec, "flare family for the rvc rules");
    color->add_option("--out", out);

    auto* reproduce = app.add_subcommand("reproduce", "predicted-vs-exact grid");
    reproduce->add_option("--theorem", theorem)->required();
    reproduce->add_option("--m", m_range, "range, e.g. 2..4");
    reproduce->add_option("--n", n_range, "range, e.g. 2..3");
    reproduce->add_option("--format", rformat)->check(CLI::IsMember({"csv", "json"}));
    reproduce->add_option("--budget-nodes", budget_nodes);
    reproduce->add_option("--budget-seconds", budget_seconds);
    reproduce->add_option("--workers", workers);
    reproduce->add_flag("--force", force, "solve past the size caps");
    reproduce->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (construct->parsed())
            return cmd_construct(core_spec, edges, flare_spec, format, out);
        if (verify->parsed())
            return cmd_verify(graph_path, coloring_path);
        if (solve->parsed())
            return cmd_solve(graph_path, target_name, budget_nodes, budget_seconds, workers,
                             force, out);
        if (color->parsed())
            return cmd_color(rule, m, n, edges, core_spec, flare_spec, out);
        if (reproduce->parsed())
            return cmd_reproduce(theorem, m_range, n_range, rformat, budget_nodes,
                                 budget_seconds, workers, force, out);
    } catch (const UnsupportedSpec& e) {
        std::cerr << "unsupported spec: " << e.what() << "\n";
        return 2;
    } catch (const FormulaCoverageError& e) {
        std::cerr << "formula coverage error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "bad input file: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
