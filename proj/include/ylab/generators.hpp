#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "ylab/analysis.hpp"
#include "ylab/correspondence.hpp"
#include "ylab/heuristic.hpp"
#include "ylab/instance.hpp"
#include "ylab/oracle.hpp"
#include "ylab/random_instances.hpp"

namespace ylab {

/// Witness that the max-min adding rule misses the optimum: four points
/// where the rule's run is strictly longer than the exact optimum, every
/// selection is tie-free, and the cutting procedure applied to the optimal
/// tour removes a different point than the adding run inserts (so the two
/// procedures are not inverses).
///
/// Coordinates frozen from a search over four-point configurations (two
/// fixed anchor points, the others sampled on a 0.25 lattice), keeping the
/// first configuration that passed all of the above checks against the
/// permutation oracle. The checks are re-run by check_fixture().
inline Instance gen_maxmin_counterexample() {
    return Instance::from_points({{0.0, 0.0}, {10.0, 0.0}, {0.5, 1.5}, {0.3, -1.2}},
                                 DistanceConvention::exact, "maxmin-counterexample");
}

/// Witness that a crossing-free tour need not be optimal: an outer triangle
/// (point 2 on top) with two interior points. The min-min rule inserts the
/// interior points outside-in and ends on a self-intersection-free tour that
/// is still strictly longer than the optimum. Point 3 sits nearer the
/// triangle's boundary ("side"), point 4 nearer its centroid ("middle"), and
/// the top is closer to the side point than to the middle one.
///
/// Interior coordinates frozen from a search on a 0.25 lattice inside the
/// fixed outer triangle; two interior points is the smallest count for which
/// the search satisfied every check. Re-validated by check_fixture().
inline Instance gen_minmin_counterexample() {
    return Instance::from_points(
        {{0.0, 0.0}, {12.0, 0.0}, {6.0, 10.0}, {6.25, 5.5}, {5.75, 4.0}},
        DistanceConvention::exact, "minmin-counterexample");
}

/// True when the insertion order walks strictly from the outside in:
/// distances to `center` strictly decrease along the sequence.
inline bool insertion_order_outside_in(const Instance& inst, const std::vector<PointId>& order,
                                       Point center) {
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        const double cur = euclidean(inst.coord(order[i]), center);
        const double nxt = euclidean(inst.coord(order[i + 1]), center);
        if (cur <= nxt) return false;
    }
    return true;
}

/// One machine-checkable expected property of a fixture.
struct FixtureCheck {
    std::string name;
    bool passed = false;
};

namespace detail {

inline bool trace_tie_free(const RunTrace& t) {
    if (t.initial_pair.size() != 1 || t.initial_third.size() != 1) return false;
    for (const auto& s : t.steps) {
        if (s.size() != 1) return false;
    }
    return true;
}

inline std::vector<FixtureCheck> check_maxmin_counterexample(const Instance& inst) {
    std::vector<FixtureCheck> checks;
    const RunTrace run = run_adding(inst, Variant::maxmin);
    const OptimalResult opt = optimal_permutation(inst);

    checks.push_back({"tie-free at eps=1e-9", trace_tie_free(run)});
    checks.push_back({"opening pair is the farthest pair (0,1)",
                      run.initial_pair.picked().a == 0 && run.initial_pair.picked().b == 1});
    checks.push_back({"third point maximizes the triangle perimeter",
                      run.initial_third.picked().point == 2});
    checks.push_back({"maxmin gap > 1e-6", gap(run.final_length, opt.length) > 1e-6});

    const CutTrace cut = run_cutting(inst, opt.tour);
    std::vector<PointId> reversed(cut.removal_order.rbegin(), cut.removal_order.rend());
    checks.push_back({"adding does not invert cutting", reversed != run.insertion_order()});
    return checks;
}

inline std::vector<FixtureCheck> check_minmin_counterexample(const Instance& inst) {
    std::vector<FixtureCheck> checks;
    const RunTrace run = run_adding(inst, Variant::minmin);
    const OptimalResult opt = optimal_permutation(inst);

    checks.push_back({"tie-free at eps=1e-9", trace_tie_free(run)});
    checks.push_back({"initial triangle is the outer triangle",
                      run.initial_pair.picked().a == 0 && run.initial_pair.picked().b == 1 &&
                          run.initial_third.picked().point == 2});
    const Point center{(inst.coord(0).x + inst.coord(1).x + inst.coord(2).x) / 3.0,
                       (inst.coord(0).y + inst.coord(1).y + inst.coord(2).y) / 3.0};
    checks.push_back(
        {"interior points inserted outside-in", insertion_order_outside_in(inst, run.insertion_order(), center)});
    checks.push_back({"minmin gap > 1e-6", gap(run.final_length, opt.length) > 1e-6});
    checks.push_back({"top is closer to the side point than to the middle point",
                      euclidean(inst.coord(2), inst.coord(3)) < euclidean(inst.coord(2), inst.coord(4))});
    checks.push_back({"final tour is crossing-free yet suboptimal",
                      find_crossings(inst, run.final_tour).empty() &&
                          gap(run.final_length, opt.length) > 1e-6});
    return checks;
}

}  // namespace detail

/// Named fixture with its expected-property list; generating and checking
/// must pass before a fixture is written anywhere.
struct FixtureSpec {
    std::string name;
    std::function<Instance()> build;
    std::function<std::vector<FixtureCheck>(const Instance&)> check;
};

inline const std::vector<FixtureSpec>& fixture_registry() {
    static const std::vector<FixtureSpec> fixtures = {
        {"maxmin-counterexample", gen_maxmin_counterexample, detail::check_maxmin_counterexample},
        {"minmin-counterexample", gen_minmin_counterexample, detail::check_minmin_counterexample},
    };
    return fixtures;
}

inline const FixtureSpec* find_fixture(const std::string& name) {
    for (const auto& f : fixture_registry()) {
        if (f.name == name) return &f;
    }
    return nullptr;
}

}  // namespace ylab
