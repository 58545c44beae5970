#pragma once

#include <algorithm>
#include <vector>

#include "ylab/heuristic.hpp"
#include "ylab/oracle.hpp"

namespace ylab {

/// Side-by-side comparison of the cutting procedure (run on the exact
/// optimal tour) with both adding procedures. `*_corresponds` asks whether
/// the reversed removal order equals the adding insertion order, i.e.
/// whether adding really inverts cutting.
struct InverseCorrespondenceReport {
    OptimalResult optimal;
    std::vector<PointId> removal_order;            // cutting, applied to the optimal tour
    std::vector<PointId> maxmin_insertion_order;   // adding steps after the triangle
    std::vector<PointId> minmin_insertion_order;
    bool maxmin_corresponds = false;
    bool minmin_corresponds = false;
    bool maxmin_reaches_optimum = false;
    bool minmin_reaches_optimum = false;
    double maxmin_gap = 0.0;
    double minmin_gap = 0.0;
};

inline InverseCorrespondenceReport inverse_correspondence(const Instance& inst,
                                                          double eps = kDefaultEps) {
    InverseCorrespondenceReport rep;
    rep.optimal = optimal_tour(inst);

    const CutTrace cut = run_cutting(inst, rep.optimal.tour, eps);
    rep.removal_order = cut.removal_order;
    std::vector<PointId> reversed(rep.removal_order.rbegin(), rep.removal_order.rend());

    const RunTrace maxmin = run_adding(inst, Variant::maxmin, eps);
    const RunTrace minmin = run_adding(inst, Variant::minmin, eps);
    rep.maxmin_insertion_order = maxmin.insertion_order();
    rep.minmin_insertion_order = minmin.insertion_order();
    rep.maxmin_corresponds = reversed == rep.maxmin_insertion_order;
    rep.minmin_corresponds = reversed == rep.minmin_insertion_order;

    rep.maxmin_gap = gap(maxmin.final_length, rep.optimal.length);
    rep.minmin_gap = gap(minmin.final_length, rep.optimal.length);
    const double tol = 1e-9 * std::max(1.0, rep.optimal.length);
    rep.maxmin_reaches_optimum = maxmin.final_length <= rep.optimal.length + tol;
    rep.minmin_reaches_optimum = minmin.final_length <= rep.optimal.length + tol;
    return rep;
}

}  // namespace ylab
