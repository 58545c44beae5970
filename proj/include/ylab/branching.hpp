#pragma once

#include <cstdint>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "ylab/heuristic.hpp"
#include "ylab/instance.hpp"

namespace ylab {

struct BranchLimits {
    std::uint64_t max_nodes = 1'000'000;  // tie trees get astronomically large; always bounded
    int max_depth = std::numeric_limits<int>::max();
};

/// Statistics of the tie-branch tree. Depth d holds partial routes of d+2
/// points: the chosen pairs sit at depth 0, triangles at depth 1, complete
/// tours at depth n-2.
struct BranchReport {
    std::vector<std::uint64_t> nodes_per_depth;
    std::uint64_t total_nodes = 0;
    std::uint64_t leaves = 0;
    std::uint64_t distinct_final_tours = 0;
    double best_final_length = 0.0;
    double worst_final_length = 0.0;
    bool truncated = false;
    bool dedup_enabled = false;
    std::uint64_t dedup_hits = 0;
};

struct EnumerationOutcome {
    BranchReport report;
    std::vector<Tour> distinct_tours;  // canonical forms, sorted
};

namespace detail {

struct Enumerator {
    const Instance& inst;
    Variant variant;
    double eps;
    BranchLimits limits;
    bool dedup;

    BranchReport report;
    std::set<std::vector<PointId>> finals;
    std::set<std::vector<PointId>> seen_states;  // canonical partial tours, dedup only

    Enumerator(const Instance& i, Variant v, double e, BranchLimits lim, bool dd)
        : inst(i), variant(v), eps(e), limits(lim), dedup(dd) {
        report.nodes_per_depth.assign(static_cast<std::size_t>(i.size() - 2) + 1, 0);
        report.dedup_enabled = dd;
        report.best_final_length = std::numeric_limits<double>::infinity();
        report.worst_final_length = -std::numeric_limits<double>::infinity();
    }

    // Accounts for a newly materialized state; false once the node budget is
    // spent, which aborts the whole exploration.
    bool admit(int depth) {
        if (report.total_nodes >= limits.max_nodes) {
            report.truncated = true;
            return false;
        }
        ++report.total_nodes;
        ++report.nodes_per_depth[static_cast<std::size_t>(depth)];
        return true;
    }

    void leaf(const Tour& t) {
        ++report.leaves;
        const double len = tour_length(inst, t);
        report.best_final_length = std::min(report.best_final_length, len);
        report.worst_final_length = std::max(report.worst_final_length, len);
        finals.insert(canonical_cycle(t.order));
    }

    // Returns false when exploration must stop (budget exhausted).
    bool expand(const Tour& partial) {
        const int depth = partial.size() - 2;
        if (partial.size() == inst.size()) {
            leaf(partial);
            return true;
        }
        if (depth >= limits.max_depth) {
            report.truncated = true;
            return true;  // stop deepening, keep exploring siblings
        }
        const auto ties = adding_step(inst, partial, variant, eps);
        for (const auto& cand : ties.candidates) {
            const Tour child = apply_insertion(partial, cand);
            if (dedup && !seen_states.insert(canonical_cycle(child.order)).second) {
                ++report.dedup_hits;
                continue;
            }
            if (!admit(depth + 1)) return false;
            if (!expand(child)) return false;
        }
        return true;
    }

    void run() {
        const auto pairs = initial_pair(inst, eps);
        for (const auto& pc : pairs.candidates) {
            if (!admit(0)) return;
            const auto thirds = initial_triangle(inst, pc.a, pc.b, eps);
            for (const auto& tc : thirds.candidates) {
                const Tour triangle{{pc.a, pc.b, tc.point}};
                if (dedup && !seen_states.insert(canonical_cycle(triangle.order)).second) {
                    ++report.dedup_hits;
                    continue;
                }
                if (!admit(1)) return;
                if (!expand(triangle)) return;
            }
        }
    }
};

}  // namespace detail

/// Depth-first exploration of every run reachable by resolving each tie set
/// each possible way, the initial pair and third point included. Hitting the
/// node budget is not an error: the report comes back truncated with partial
/// counts. With dedup on, partial states equal as cyclic tours are expanded
/// once and further arrivals count as dedup_hits; the set of distinct final
/// tours is unchanged by dedup.
inline EnumerationOutcome enumerate_runs(const Instance& inst, Variant variant,
                                         double eps = kDefaultEps, BranchLimits limits = {},
                                         bool dedup = false) {
    detail::Enumerator e(inst, variant, eps, limits, dedup);
    e.run();
    EnumerationOutcome out;
    if (e.report.leaves == 0) {
        e.report.best_final_length = 0.0;
        e.report.worst_final_length = 0.0;
    }
    e.report.distinct_final_tours = e.finals.size();
    out.report = std::move(e.report);
    out.distinct_tours.reserve(e.finals.size());
    for (const auto& order : e.finals) out.distinct_tours.push_back(Tour{order});
    return out;
}

/// Tie-set sizes along the single deterministic run: a cheap proxy for the
/// branching factor without walking the tree.
struct TieProfile {
    std::size_t pair_ties = 0;
    std::size_t third_ties = 0;
    std::vector<std::size_t> step_ties;
};

inline TieProfile tie_profile(const Instance& inst, Variant variant, double eps = kDefaultEps) {
    const RunTrace trace = run_adding(inst, variant, eps);
    TieProfile profile;
    profile.pair_ties = trace.initial_pair.size();
    profile.third_ties = trace.initial_third.size();
    profile.step_ties.reserve(trace.steps.size());
    for (const auto& s : trace.steps) profile.step_ties.push_back(s.size());
    return profile;
}

/// Raw evidence table for growth across grid sizes; no fitting, just counts
/// with truncation markers.
struct GrowthRow {
    int k = 0;
    std::uint64_t total_nodes = 0;
    std::uint64_t leaves = 0;
    std::uint64_t distinct_final_tours = 0;
    bool truncated = false;
};

inline std::vector<GrowthRow> growth_estimate(const std::vector<std::pair<int, BranchReport>>& reports) {
    if (reports.size() < 2) {
        raise(ErrorKind::TooFewPoints, "growth table needs at least two grid sizes");
    }
    std::vector<GrowthRow> rows;
    rows.reserve(reports.size());
    for (const auto& [k, rep] : reports) {
        rows.push_back({k, rep.total_nodes, rep.leaves, rep.distinct_final_tours, rep.truncated});
    }
    return rows;
}

}  // namespace ylab
