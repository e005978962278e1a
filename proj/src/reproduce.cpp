#include "rvclab/reproduce.hpp"
#include "rvclab/errors.hpp"
#include "rvclab/json_io.hpp"

#include <map>
#include <sstream>

namespace rvclab {

std::string to_string(ReproduceRow::Agreement a) {
    switch (a) {
        case ReproduceRow::Agreement::Match: return "MATCH";
        case ReproduceRow::Agreement::Mismatch: return "MISMATCH";
        case ReproduceRow::Agreement::ConstructionFails: return "CONSTRUCTION_FAILS";
        default: return "SKIPPED";
    }
}

namespace {

struct SelectorPlan {
    std::string family;
    Target target;
    int m_lo, m_hi, n_lo, n_hi;  // default grid
};

const std::map<std::string, SelectorPlan>& selector_plans() {
    static const std::map<std::string, SelectorPlan> plans = {
        {"path", {"path", Target::Rvcl, 2, 4, 2, 3}},
        {"tree-rvc", {"tree", Target::Rvc, 2, 4, 2, 3}},
        {"cycle-rvc", {"cycle", Target::Rvc, 3, 6, 2, 3}},
        {"cycle-rvcl", {"cycle", Target::Rvcl, 3, 6, 2, 3}},
        {"complete-rvc", {"complete", Target::Rvc, 3, 4, 2, 3}},
        {"complete-rvcl", {"complete", Target::Rvcl, 3, 3, 3, 4}},
    };
    return plans;
}

FamilySpec cell_spec(const std::string& family, int m, int n) {
    if (family == "path")
        return FamilySpec::path(m, n);
    if (family == "cycle")
        return FamilySpec::cycle(m, n);
    if (family == "complete")
        return FamilySpec::complete(m, n);
    // trees are run on path edge lists; arbitrary trees go through the library
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < m; ++i)
        edges.push_back({i, i + 1});
    return FamilySpec::tree(std::move(edges), n);
}

VertexColoring cell_coloring(const std::string& selector, const FamilySpec& spec, int m, int n) {
    if (selector == "path")
        return color_path_rvcl(m, n);
    if (selector == "tree-rvc")
        return color_tree_rvc(spec.build_core(), spec.build_flare());
    if (selector == "cycle-rvc")
        return color_cycle_rvc(m, spec.build_flare());
    if (selector == "cycle-rvcl")
        return color_cycle_rvcl(m, n);
    if (selector == "complete-rvc")
        return color_complete_rvc(m, spec.build_flare());
    return color_complete_rvcl(m, n);
}

std::optional<ReproduceRow> eval_cell(const std::string& selector, const SelectorPlan& plan,
                                      int m, int n, const ReproduceOptions& options) {
    ReproduceRow row;
    row.family = plan.family;
    row.m = m;
    row.n = n;
    row.target = plan.target;

    FamilySpec spec = cell_spec(plan.family, m, n);
    PredictedValue predicted;
    try {
        predicted = predict(spec, plan.target);
    } catch (const UnsupportedSpec&) {
        return std::nullopt;  // outside the formula's domain
    }
    if (!predicted.value)
        return std::nullopt;
    row.predicted = predicted.value;
    row.branch = predicted.branch;

    Graph corona = spec.build_corona();
    try {
        VertexColoring coloring = cell_coloring(selector, spec, m, n);
        bool count_ok = coloring.k == *predicted.value;
        VerificationReport report = plan.target == Target::Rvc
                                        ? is_rainbow_vertex_coloring(corona, coloring)
                                        : is_locating_rainbow_coloring(corona, coloring);
        row.construction_valid = count_ok && report.all_ok();
    } catch (const FormulaCoverageError&) {
        row.construction_valid = false;
    } catch (const UnsupportedSpec&) {
        row.construction_valid = false;
    }

    int cap = plan.target == Target::Rvcl ? options.rvcl_cap : options.rvc_cap;
    if (corona.vertex_count() <= cap || options.force) {
        SearchOptions search;
        search.workers = options.workers;
        SolveResult result = solve_exact(corona, plan.target, options.budget, search);
        if (result.status == SolveStatus::Proved)
            row.exact = result.value;
        else
            row.skipped_size = corona.vertex_count();
    } else {
        row.skipped_size = corona.vertex_count();
    }

    if (!row.construction_valid)
        row.agreement = ReproduceRow::Agreement::ConstructionFails;
    else if (!row.exact)
        row.agreement = ReproduceRow::Agreement::Skipped;
    else if (*row.exact == *row.predicted)
        row.agreement = ReproduceRow::Agreement::Match;
    else
        row.agreement = ReproduceRow::Agreement::Mismatch;
    return row;
}

void run_selector(const std::string& selector, const ReproduceOptions& options,
                  std::vector<ReproduceRow>& rows) {
    const SelectorPlan& plan = selector_plans().at(selector);
    int m_lo = options.m_lo.value_or(plan.m_lo);
    int m_hi = options.m_hi.value_or(plan.m_hi);
    int n_lo = options.n_lo.value_or(plan.n_lo);
    int n_hi = options.n_hi.value_or(plan.n_hi);
    for (int m = m_lo; m <= m_hi; ++m)
        for (int n = n_lo; n <= n_hi; ++n)
            if (auto row = eval_cell(selector, plan, m, n, options))
                rows.push_back(std::move(*row));
}

} // namespace

std::vector<ReproduceRow> reproduce_theorem(const std::string& selector,
                                            const ReproduceOptions& options) {
    std::vector<ReproduceRow> rows;
    if (selector == "all") {
        for (const auto& [name, plan] : selector_plans())
            run_selector(name, options, rows);
        return rows;
    }
    if (!selector_plans().count(selector))
        throw InvalidParameter("unknown theorem selector: " + selector);
    run_selector(selector, options, rows);
    return rows;
}

std::string rows_to_csv(const std::vector<ReproduceRow>& rows) {
    std::ostringstream os;
    os << "family,m,n,target,predicted,branch,construction_valid,exact,agreement\n";
    for (const auto& r : rows) {
        os << r.family << ',' << r.m << ',' << r.n << ',' << to_string(r.target) << ','
           << (r.predicted ? std::to_string(*r.predicted) : std::string("-")) << ',' << r.branch
           << ',' << (r.construction_valid ? "true" : "false") << ',';
        if (r.exact)
            os << *r.exact;
        else
            os << "skipped(" << r.skipped_size << ")";
        os << ',' << to_string(r.agreement) << '\n';
    }
    return os.str();
}

nlohmann::ordered_json rows_to_json(const std::vector<ReproduceRow>& rows) {
    ordered_json j = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json row;
        row["family"] = r.family;
        row["m"] = r.m;
        row["n"] = r.n;
        row["target"] = to_string(r.target);
        row["predicted"] = r.predicted ? ordered_json(*r.predicted) : ordered_json(nullptr);
        row["branch"] = r.branch;
        row["construction_valid"] = r.construction_valid;
        row["exact"] = r.exact ? ordered_json(*r.exact) : ordered_json(nullptr);
        if (!r.exact)
            row["skipped_size"] = r.skipped_size;
        row["agreement"] = to_string(r.agreement);
        j.push_back(std::move(row));
    }
    return j;
}

bool rows_all_green(const std::vector<ReproduceRow>& rows) {
    for (const auto& r : rows)
        if (r.agreement == ReproduceRow::Agreement::Mismatch ||
            r.agreement == ReproduceRow::Agreement::ConstructionFails)
            return false;
    return true;
}

} // namespace rvclab
