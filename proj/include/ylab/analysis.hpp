#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "ylab/geometry.hpp"
#include "ylab/heuristic.hpp"
#include "ylab/instance.hpp"
#include "ylab/random_instances.hpp"

namespace ylab {

/// A self-intersection of a tour: two non-adjacent tour edges whose closed
/// segments meet. An endpoint touch still counts (the route passes through
/// one planar point twice); collinear overlaps are the degenerate case.
struct Crossing {
    int edge1_position = 0;
    Edge edge1;
    int edge2_position = 0;
    Edge edge2;
    Point where{};
    SegmentRelation kind = SegmentRelation::proper;

    bool degenerate() const { return kind != SegmentRelation::proper; }
};

/// All unordered pairs of non-adjacent tour edges whose closed segments
/// intersect, ordered by (edge1_position, edge2_position). Requires
/// coordinates and a structurally valid tour.
inline std::vector<Crossing> find_crossings(const Instance& inst, const Tour& t) {
    if (!inst.has_coords()) raise(ErrorKind::CoordinatesRequired, "crossing detection needs coordinates");
    if (!tour_valid(inst, t)) raise(ErrorKind::InvalidTour, "crossing detection needs a valid tour");

    const int m = t.size();
    std::vector<Crossing> out;
    if (m < 4) return out;  // a triangle has no non-adjacent edge pairs

    const auto& pts = inst.coords();
    auto at = [&](int k) { return pts[static_cast<std::size_t>(t.order[static_cast<std::size_t>(k)])]; };
    for (int i = 0; i < m; ++i) {
        const Point a1 = at(i), a2 = at((i + 1) % m);
        const double ax_lo = std::min(a1.x, a2.x), ax_hi = std::max(a1.x, a2.x);
        const double ay_lo = std::min(a1.y, a2.y), ay_hi = std::max(a1.y, a2.y);
        for (int j = i + 2; j < m; ++j) {
            if (i == 0 && j == m - 1) continue;  // wrap-around neighbors
            const Point b1 = at(j), b2 = at((j + 1) % m);
            if (std::max(b1.x, b2.x) < ax_lo || std::min(b1.x, b2.x) > ax_hi ||
                std::max(b1.y, b2.y) < ay_lo || std::min(b1.y, b2.y) > ay_hi) {
                continue;
            }
            const SegmentIntersection hit = segment_intersect(a1, a2, b1, b2);
            if (hit.kind == SegmentRelation::none) continue;
            out.push_back({i,
                           {t.order[static_cast<std::size_t>(i)], t.order[static_cast<std::size_t>((i + 1) % m)]},
                           j,
                           {t.order[static_cast<std::size_t>(j)], t.order[static_cast<std::size_t>((j + 1) % m)]},
                           hit.where,
                           hit.kind});
        }
    }
    return out;
}

namespace detail {

/// Position k such that the tour edge (order[k], order[k+1]) equals e in
/// either direction, or -1.
inline int locate_edge(const Tour& t, Edge e) {
    const int m = t.size();
    for (int k = 0; k < m; ++k) {
        const PointId a = t.order[static_cast<std::size_t>(k)];
        const PointId b = t.order[static_cast<std::size_t>((k + 1) % m)];
        if ((a == e.a && b == e.b) || (a == e.b && b == e.a)) return k;
    }
    return -1;
}

}  // namespace detail

/// Removes a crossing with the 2-opt move: reverse the stretch between the
/// two edges. On metric instances this strictly shortens the tour whenever
/// the crossing is proper. Throws CrossingStale if the crossing's edges are
/// no longer adjacent pairs of `t`.
inline Tour uncross(const Instance& inst, const Tour& t, const Crossing& c) {
    (void)inst;
    int i = detail::locate_edge(t, c.edge1);
    int j = detail::locate_edge(t, c.edge2);
    if (i < 0 || j < 0) raise(ErrorKind::CrossingStale, "crossing edges are not on the tour");
    if (i > j) std::swap(i, j);
    if (i == j || j - i == 1 || (i == 0 && j == t.size() - 1)) {
        raise(ErrorKind::CrossingStale, "crossing edges are adjacent on the tour");
    }
    Tour out = t;
    std::reverse(out.order.begin() + i + 1, out.order.begin() + j + 1);
    return out;
}

/// Applies strictly improving uncross moves until the tour is crossing-free
/// or no remaining crossing improves it. Deterministic: always attempts the
/// first crossing in scan order first.
struct UncrossResult {
    Tour tour;
    double initial_length = 0.0;
    double final_length = 0.0;
    int moves = 0;
    int residual_crossings = 0;  // non-improving (degenerate) crossings left behind
};

inline UncrossResult uncross_all(const Instance& inst, const Tour& t) {
    UncrossResult res;
    res.tour = t;
    res.initial_length = tour_length(inst, t);
    double cur_len = res.initial_length;
    for (;;) {
        const auto crossings = find_crossings(inst, res.tour);
        if (crossings.empty()) break;
        bool improved = false;
        for (const auto& c : crossings) {
            const Tour candidate = uncross(inst, res.tour, c);
            const double cand_len = tour_length(inst, candidate);
            if (cand_len < cur_len) {
                res.tour = candidate;
                cur_len = cand_len;
                ++res.moves;
                improved = true;
                break;
            }
        }
        if (!improved) {
            res.residual_crossings = static_cast<int>(crossings.size());
            break;
        }
    }
    res.final_length = cur_len;
    return res;
}

/// One row of the loop-rate experiment: how often the adding procedure's
/// tour self-intersects on uniform random instances, and how much length
/// uncrossing recovers on average.
struct LoopRateReport {
    int n = 0;
    int trials = 0;
    int with_crossings = 0;
    double rate = 0.0;
    double mean_uncross_improvement = 0.0;  // mean over trials of (len - uncrossed len) / len
    std::uint64_t seed = 0;
    Variant variant = Variant::maxmin;
};

/// Runs the deterministic adding procedure on `trials` uniform unit-square
/// instances. Trial i draws its points from the stream
/// derive_stream_seed(seed, i), so results do not depend on execution order.
inline LoopRateReport loop_rate_experiment(int n, int trials, Variant variant, std::uint64_t seed,
                                           double eps = kDefaultEps) {
    if (n < 3) raise(ErrorKind::TooFewPoints, "experiment needs n >= 3");
    if (trials < 1) raise(ErrorKind::TooFewPoints, "experiment needs at least 1 trial");
    LoopRateReport rep;
    rep.n = n;
    rep.trials = trials;
    rep.seed = seed;
    rep.variant = variant;
    double improvement_sum = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        const Instance inst = gen_random_uniform(n, derive_stream_seed(seed, static_cast<std::uint64_t>(trial)));
        const RunTrace run = run_adding(inst, variant, eps);
        const auto crossings = find_crossings(inst, run.final_tour);
        if (!crossings.empty()) {
            ++rep.with_crossings;
            const UncrossResult ur = uncross_all(inst, run.final_tour);
            improvement_sum += (ur.initial_length - ur.final_length) / ur.initial_length;
        }
    }
    rep.rate = static_cast<double>(rep.with_crossings) / static_cast<double>(trials);
    rep.mean_uncross_improvement = improvement_sum / static_cast<double>(trials);
    return rep;
}

}  // namespace ylab
