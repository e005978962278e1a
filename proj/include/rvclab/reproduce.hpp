// reproduce.hpp — predicted-vs-exact grids: for each (family, m, n) cell the
// closed-form prediction, the generated coloring's verification verdict, and
// the solver's exact value when the instance is within the size cap.
#pragma once

#include "rvclab/constructions.hpp"
#include "rvclab/solver.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace rvclab {

struct ReproduceRow {
    std::string family;
    int m = 0;
    int n = 0;
    Target target = Target::Rvc;
    std::optional<int> predicted;
    std::string branch;
    bool construction_valid = false;
    std::optional<int> exact;
    int skipped_size = 0;  // vertex count when the solver was skipped
    enum class Agreement { Match, Mismatch, ConstructionFails, Skipped } agreement =
        Agreement::Skipped;
};

std::string to_string(ReproduceRow::Agreement a);

struct ReproduceOptions {
    std::optional<int> m_lo, m_hi, n_lo, n_hi;  // defaults per selector
    bool force = false;                         // solve past the size caps
    int rvcl_cap = 18;
    int rvc_cap = 24;
    SearchBudget budget;
    int workers = 1;
};

// Selectors: path, tree-rvc, cycle-rvc, cycle-rvcl, complete-rvc,
// complete-rvcl, all. Cells outside a formula's domain are omitted.
std::vector<ReproduceRow> reproduce_theorem(const std::string& selector,
                                            const ReproduceOptions& options = {});

// family,m,n,target,predicted,branch,construction_valid,exact,agreement
std::string rows_to_csv(const std::vector<ReproduceRow>& rows);
nlohmann::ordered_json rows_to_json(const std::vector<ReproduceRow>& rows);

bool rows_all_green(const std::vector<ReproduceRow>& rows);

} // namespace rvclab
