#include "rvclab/solver.hpp"
#include "rvclab/errors.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <cassert>
#include <numeric>
#include <thread>

namespace rvclab {

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Proved: return "proved";
        case SolveStatus::UpperWitnessOnly: return "upper-witness-only";
        default: return "budget-exhausted";
    }
}

namespace {

using Clock = std::chrono::steady_clock;

enum class Mode { Search, Count };

struct LevelContext {
    const Graph& g;
    const DistanceMatrix& dm;
    Target target;
    int k;
    int n;
    Mode mode;
    bool twin_prune;
    bool rainbow_prune;
    std::vector<VertexId> order;  // position -> vertex, degree desc then id
    std::vector<int> pos_of;
    std::vector<int> twin_class;  // -1 for singletons
    // scheduled rainbow-path checks: optimistic ones treat unassigned
    // internals as wildcards (sound: an optimistic failure rules out every
    // completion), the exact one runs once all potential internals have
    // colors
    struct PairCheck {
        VertexId u, v;
        bool exact;
    };
    std::vector<std::vector<PairCheck>> pairs_at;
    bool infeasible_by_distance = false;

    std::atomic<std::uint64_t>* nodes;
    std::uint64_t node_cap;
    std::uint64_t flush_stride = 4096;  // budget check cadence
    Clock::time_point deadline;
    std::atomic<bool>* stop;
    std::atomic<bool>* budget_cut;
};

LevelContext make_context(const Graph& g, const DistanceMatrix& dm, Target target,
                          int k, Mode mode, const SearchOptions& options,
                          std::atomic<std::uint64_t>* nodes, std::uint64_t node_cap,
                          Clock::time_point deadline, std::atomic<bool>* stop,
                          std::atomic<bool>* budget_cut) {
    LevelContext ctx{g, dm, target, k, g.vertex_count(), mode,
                     options.twin_prune && target == Target::Rvcl && mode == Mode::Search,
                     options.rainbow_prune && mode == Mode::Search,
                     {}, {}, {}, {}, false,
                     nodes, node_cap,
                     std::clamp<std::uint64_t>(node_cap / 4, 1, 4096),
                     deadline, stop, budget_cut};

    ctx.order.resize(ctx.n);
    std::iota(ctx.order.begin(), ctx.order.end(), 0);
    std::sort(ctx.order.begin(), ctx.order.end(), [&](VertexId a, VertexId b) {
        if (g.degree(a) != g.degree(b))
            return g.degree(a) > g.degree(b);
        return a < b;
    });
    ctx.pos_of.assign(ctx.n, 0);
    for (int p = 0; p < ctx.n; ++p)
        ctx.pos_of[ctx.order[p]] = p;

    ctx.twin_class.assign(ctx.n, -1);
    if (ctx.twin_prune) {
        auto tp = twin_classes(g, dm);
        for (int c = 0; c < static_cast<int>(tp.classes.size()); ++c)
            if (tp.classes[c].size() >= 2)
                for (VertexId v : tp.classes[c])
                    ctx.twin_class[v] = c;
    }

    if (mode == Mode::Search) {
        // A pair at distance <= 2 always has a rainbow path. A pair further
        // apart than k+1 never has one: any path that long repeats an
        // internal color.
        ctx.pairs_at.assign(ctx.n, {});
        for (VertexId u = 0; u < ctx.n; ++u)
            for (VertexId v = u + 1; v < ctx.n; ++v) {
                int d = dm.at(u, v);
                if (d <= 2)
                    continue;
                if (d > k + 1) {
                    ctx.infeasible_by_distance = true;
                    return ctx;
                }
                if (!ctx.rainbow_prune) {
                    // no scheduling: every pair is checked at the leaf
                    ctx.pairs_at[ctx.n - 1].push_back({u, v, true});
                    continue;
                }
                int trigger = 0;
                int geo_trigger = 0;  // last geodesic internal
                for (VertexId w = 0; w < ctx.n; ++w) {
                    if (w == u || w == v)
                        continue;
                    int through = dm.at(u, w) + dm.at(w, v);
                    if (through <= k + 1)
                        trigger = std::max(trigger, ctx.pos_of[w]);
                    if (through == d)
                        geo_trigger = std::max(geo_trigger, ctx.pos_of[w]);
                }
                if (geo_trigger < trigger)
                    ctx.pairs_at[geo_trigger].push_back({u, v, false});
                ctx.pairs_at[trigger].push_back({u, v, true});
            }
    }
    return ctx;
}

struct Worker {
    const LevelContext& ctx;
    std::vector<int> color;       // vertex -> 0 unassigned / 1..k
    std::vector<char> on_path;    // rvp scratch
    std::vector<char> used_colors;
    std::vector<int> codes;       // locating scratch, n rows of k entries
    std::vector<int> code_order;
    std::uint64_t local_nodes = 0;
    std::uint64_t unflushed = 0;
    bool aborted = false;
    std::optional<std::vector<int>> witness;
    std::uint64_t count = 0;  // Mode::Count leaves

    explicit Worker(const LevelContext& ctx)
        : ctx(ctx), color(ctx.n, 0), on_path(ctx.n, 0), used_colors(ctx.k + 1, 0),
          codes(static_cast<size_t>(ctx.n) * ctx.k), code_order(ctx.n) {}

    void flush_budget() {
        if (unflushed == 0)
            return;
        std::uint64_t total = ctx.nodes->fetch_add(unflushed, std::memory_order_relaxed) + unflushed;
        unflushed = 0;
        if (total > ctx.node_cap || Clock::now() > ctx.deadline) {
            ctx.budget_cut->store(true, std::memory_order_relaxed);
            ctx.stop->store(true, std::memory_order_relaxed);
        }
    }

    // returns true when the search must unwind
    bool bump_node() {
        ++local_nodes;
        if (++unflushed >= ctx.flush_stride)
            flush_budget();
        if (ctx.stop->load(std::memory_order_relaxed)) {
            aborted = true;
            return true;
        }
        return false;
    }

    // Unassigned internals (color 0) act as wildcards: they can always take
    // a fresh color, so paths through them count as optimistically rainbow.
    bool rvp_dfs(VertexId cur, VertexId goal, int internals) {
        for (VertexId w : ctx.g.neighbors(cur)) {
            if (w == goal)
                return true;
            if (on_path[w])
                continue;
            if (internals + ctx.dm.at(w, goal) > ctx.k)
                continue;
            int cw = color[w];
            if (cw != 0 && used_colors[cw])
                continue;
            on_path[w] = 1;
            if (cw != 0)
                used_colors[cw] = 1;
            bool found = rvp_dfs(w, goal, internals + 1);
            on_path[w] = 0;
            if (cw != 0)
                used_colors[cw] = 0;
            if (found)
                return true;
        }
        return false;
    }

    bool rvp_ok(VertexId u, VertexId v) {
        on_path[u] = 1;
        bool found = rvp_dfs(u, v, 0);
        on_path[u] = 0;
        return found;
    }

    bool locating_ok() {
        const int n = ctx.n, k = ctx.k;
        std::fill(codes.begin(), codes.end(), ctx.dm.size() + 1);
        for (VertexId w = 0; w < n; ++w) {
            int cw = color[w] - 1;
            for (VertexId v = 0; v < n; ++v) {
                int& entry = codes[static_cast<size_t>(v) * k + cw];
                entry = std::min(entry, ctx.dm.at(v, w));
            }
        }
        std::iota(code_order.begin(), code_order.end(), 0);
        auto row = [&](int v) { return codes.begin() + static_cast<size_t>(v) * k; };
        std::sort(code_order.begin(), code_order.end(), [&](int a, int b) {
            return std::lexicographical_compare(row(a), row(a) + k, row(b), row(b) + k);
        });
        for (int i = 0; i + 1 < n; ++i)
            if (std::equal(row(code_order[i]), row(code_order[i]) + k, row(code_order[i + 1])))
                return false;
        return true;
    }

    bool leaf_valid() {
        if (!ctx.rainbow_prune) {
            for (const auto& bucket : ctx.pairs_at)
                for (const auto& pc : bucket)
                    if (!rvp_ok(pc.u, pc.v))
                        return false;
        }
        if (ctx.target == Target::Rvcl && !locating_ok())
            return false;
        return true;
    }

    // One assignment step shared by prefix replay and the DFS: applies the
    // canonicality, surjectivity-reachability, twin and scheduled-pair
    // checks for giving `col` to the vertex at `pos`.
    bool step_ok(int pos, int col, int max_used) {
        int new_max = std::max(max_used, col);
        if (ctx.k - new_max > ctx.n - pos - 1)
            return false;  // not enough vertices left to reach k colors
        VertexId v = ctx.order[pos];
        if (ctx.twin_prune && ctx.twin_class[v] >= 0) {
            for (int p = 0; p < pos; ++p) {
                VertexId w = ctx.order[p];
                if (ctx.twin_class[w] == ctx.twin_class[v] && color[w] == col)
                    return false;
            }
        }
        color[v] = col;
        if (ctx.rainbow_prune)
            for (const auto& pc : ctx.pairs_at[pos])
                if (!rvp_ok(pc.u, pc.v)) {
                    color[v] = 0;
                    return false;
                }
        return true;
    }

    bool dfs(int pos, int max_used) {
        if (pos == ctx.n) {
            if (ctx.mode == Mode::Count) {
                ++count;
                return false;
            }
            if (leaf_valid()) {
                witness = color;
                return true;
            }
            return false;
        }
        int limit = std::min(ctx.k, max_used + 1);
        VertexId v = ctx.order[pos];
        for (int col = 1; col <= limit; ++col) {
            if (bump_node())
                return false;
            if (!step_ok(pos, col, max_used))
                continue;
            if (dfs(pos + 1, std::max(max_used, col)))
                return true;
            color[v] = 0;
            if (aborted)
                return false;
        }
        color[v] = 0;
        return false;
    }

    // Replays a canonical prefix through the same checks, then searches the
    // subtree. Returns true when a witness was found.
    bool run_prefix(const std::vector<int>& prefix) {
        std::fill(color.begin(), color.end(), 0);
        int max_used = 0;
        for (int pos = 0; pos < static_cast<int>(prefix.size()); ++pos) {
            if (bump_node())
                return false;
            if (!step_ok(pos, prefix[pos], max_used))
                return false;
            max_used = std::max(max_used, prefix[pos]);
        }
        return dfs(static_cast<int>(prefix.size()), max_used);
    }
};

void gen_prefixes(const LevelContext& ctx, int depth, int pos, int max_used,
                  std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (pos == depth) {
        out.push_back(cur);
        return;
    }
    int limit = std::min(ctx.k, max_used + 1);
    for (int col = 1; col <= limit; ++col) {
        if (ctx.k - std::max(max_used, col) > ctx.n - pos - 1)
            continue;
        cur.push_back(col);
        gen_prefixes(ctx, depth, pos + 1, max_used > col ? max_used : col, cur, out);
        cur.pop_back();
    }
}

LevelResult run_level(const Graph& g, const DistanceMatrix& dm, Target target, int k,
                      const SearchOptions& options, std::uint64_t node_cap,
                      Clock::time_point deadline) {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::atomic<bool> budget_cut{false};

    LevelContext ctx = make_context(g, dm, target, k, Mode::Search, options, &nodes,
                                    node_cap, deadline, &stop, &budget_cut);
    LevelResult result;
    if (ctx.infeasible_by_distance)
        return result;  // some pair is too far apart for any k-coloring

    int workers = std::max(1, options.workers);
    if (workers == 1) {
        Worker w(ctx);
        bool found = w.dfs(0, 0);
        w.flush_budget();
        result.nodes = nodes.load();
        if (found) {
            result.status = LevelStatus::FoundWitness;
            result.witness = VertexColoring::make(k, *w.witness);
        } else if (budget_cut.load()) {
            result.status = LevelStatus::BudgetCut;
        }
        return result;
    }

    // Fan out over canonical prefixes; workers take prefixes round-robin and
    // merge by prefix rank so the reported value never depends on timing.
    int depth = 0;
    std::vector<std::vector<int>> prefixes{{}};
    while (depth < ctx.n && static_cast<int>(prefixes.size()) < 4 * workers) {
        ++depth;
        prefixes.clear();
        std::vector<int> cur;
        gen_prefixes(ctx, depth, 0, 0, cur, prefixes);
    }

    struct Slot {
        long rank = -1;
        std::optional<std::vector<int>> witness;
    };
    std::vector<Slot> slots(workers);
    std::vector<std::thread> threads;
    for (int t = 0; t < workers; ++t)
        threads.emplace_back([&, t] {
            Worker w(ctx);
            for (size_t idx = t; idx < prefixes.size(); idx += workers) {
                if (stop.load(std::memory_order_relaxed))
                    break;
                if (w.run_prefix(prefixes[idx])) {
                    slots[t].rank = static_cast<long>(idx);
                    slots[t].witness = std::move(w.witness);
                    stop.store(true, std::memory_order_relaxed);
                    break;
                }
                if (w.aborted)
                    break;
            }
            w.flush_budget();
        });
    for (auto& th : threads)
        th.join();

    result.nodes = nodes.load();
    const Slot* best = nullptr;
    for (const auto& s : slots)
        if (s.rank >= 0 && (!best || s.rank < best->rank))
            best = &s;
    if (best) {
        result.status = LevelStatus::FoundWitness;
        result.witness = VertexColoring::make(k, *best->witness);
    } else if (budget_cut.load()) {
        result.status = LevelStatus::BudgetCut;
    }
    return result;
}

} // namespace

LevelResult feasible_with_k(const Graph& g, Target target, int k,
                            const SearchBudget& budget, const SearchOptions& options) {
    if (k < 1 || k > g.vertex_count())
        throw InvalidParameter("feasible_with_k needs 1 <= k <= |V|");
    auto dm = DistanceMatrix::bfs_all_pairs(g);
    auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                       std::chrono::duration<double>(budget.max_seconds_total));
    return run_level(g, dm, target, k, options, budget.max_nodes_per_level, deadline);
}

SolveResult solve_exact(const Graph& g, Target target, const SearchBudget& budget,
                        const SearchOptions& options) {
    auto t0 = Clock::now();
    auto deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                             std::chrono::duration<double>(budget.max_seconds_total));
    auto dm = DistanceMatrix::bfs_all_pairs(g);

    SolveResult result;
    result.target = target;
    BoundReport bound = target == Target::Rvc ? rvc_lower(g) : rvcl_lower(g);
    int seed = std::max(1, bound.lower);
    result.lower_bound_rule = bound.lower > 0 ? bound.lower_rule() : "none";

    const int n = g.vertex_count();
    int low = seed;  // least k not yet refuted
    for (int k = seed; k <= n; ++k) {
        LevelResult level =
            run_level(g, dm, target, k, options, budget.max_nodes_per_level, deadline);
        result.nodes_explored += level.nodes;
        if (level.status == LevelStatus::FoundWitness) {
            result.value = k;
            result.witness = std::move(level.witness);
            result.status = low == k ? SolveStatus::Proved : SolveStatus::UpperWitnessOnly;
            result.bracket_lower = low;
            result.bracket_upper = k;
            result.elapsed =
                std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
            return result;
        }
        if (level.status == LevelStatus::ExhaustedNoWitness) {
            // infeasibility at k also settles every level at or below k
            low = k + 1;
        }
        if (Clock::now() > deadline)
            break;
    }
    result.status = SolveStatus::BudgetExhausted;
    result.bracket_lower = low;
    result.bracket_upper = n;  // the all-distinct coloring is always valid
    result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
    return result;
}

std::uint64_t count_canonical_surjective_colorings(const Graph& g, int k) {
    if (k < 1 || k > g.vertex_count())
        throw InvalidParameter("count needs 1 <= k <= |V|");
    auto dm = DistanceMatrix::bfs_all_pairs(g);
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::atomic<bool> budget_cut{false};
    SearchOptions options;
    LevelContext ctx =
        make_context(g, dm, Target::Rvc, k, Mode::Count, options, &nodes,
                     std::numeric_limits<std::uint64_t>::max(),
                     Clock::now() + std::chrono::hours(24), &stop, &budget_cut);
    Worker w(ctx);
    w.dfs(0, 0);
    return w.count;
}

} // namespace rvclab
