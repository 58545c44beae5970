#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "ylab/instance.hpp"

namespace ylab {

/// Single tolerance authority for every comparison that decides algorithm
/// behavior: two disturbances (or pair distances, or perimeter gains) tie
/// when they differ by at most this absolute epsilon.
inline constexpr double kDefaultEps = 1e-9;

enum class Variant { maxmin, minmin };

inline const char* to_string(Variant v) { return v == Variant::maxmin ? "maxmin" : "minmin"; }

/// Length change from inserting p into edge (a, b):
/// dist(a,p) + dist(p,b) - dist(a,b). May be negative on matrices that
/// violate the triangle inequality.
inline double disturbance(const Instance& inst, Edge e, PointId p) {
    inst.require_id(e.a);
    inst.require_id(e.b);
    inst.require_id(p);
    if (p == e.a || p == e.b) {
        raise(ErrorKind::InvalidPointId, "insertion point " + std::to_string(p) + " lies on the edge");
    }
    return inst.dist(e.a, p) + inst.dist(p, e.b) - inst.dist(e.a, e.b);
}

/// Candidate for the opening pair: an unordered point pair and its distance.
struct PairCandidate {
    PointId a = 0, b = 0;  // a < b
    double distance = 0.0;
};

/// Candidate third point c for a fixed pair (a, b), scored by
/// dist(a,c) + dist(c,b).
struct ThirdCandidate {
    PointId point = 0;
    double gain = 0.0;
};

/// Candidate insertion: replace tour edge (edge.a, edge.b) at `edge_position`
/// by the two edges through `point`.
struct InsertionCandidate {
    int edge_position = 0;  // index k: the edge from order[k] to order[k+1 mod m]
    Edge edge;
    PointId point = 0;
    double delta = 0.0;
};

/// Candidate removal of `point` (tour neighbors a, c): `delta` is the
/// magnitude |dist(a,c) - dist(a,point) - dist(point,c)|, `signed_change`
/// the raw length change of the cut.
struct CutCandidate {
    PointId point = 0;
    PointId prev = 0, next = 0;
    double delta = 0.0;
    double signed_change = 0.0;
};

/// All candidates achieving one step's optimum within epsilon, in the
/// deterministic scan order, plus the index the default policy picks.
template <typename Candidate>
struct TieSet {
    std::vector<Candidate> candidates;
    std::size_t chosen = 0;

    std::size_t size() const { return candidates.size(); }
    const Candidate& picked() const { return candidates[chosen]; }
};

/// All unordered pairs within eps of the maximum pairwise distance, in
/// lexicographic (a, b) order. The default policy picks the smallest pair,
/// i.e. index 0.
inline TieSet<PairCandidate> initial_pair(const Instance& inst, double eps = kDefaultEps) {
    const int n = inst.size();
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            best = std::max(best, inst.dist(i, j));
        }
    }
    TieSet<PairCandidate> ties;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double d = inst.dist(i, j);
            if (d >= best - eps) ties.candidates.push_back({i, j, d});
        }
    }
    ties.chosen = 0;
    return ties;
}

/// All third points within eps of maximizing dist(a,c) + dist(c,b) for the
/// fixed pair, in ascending id order; the default policy picks index 0.
inline TieSet<ThirdCandidate> initial_triangle(const Instance& inst, PointId a, PointId b,
                                               double eps = kDefaultEps) {
    inst.require_id(a);
    inst.require_id(b);
    if (a == b) raise(ErrorKind::InvalidPointId, "pair must be distinct");
    double best = -std::numeric_limits<double>::infinity();
    for (PointId p = 0; p < inst.size(); ++p) {
        if (p == a || p == b) continue;
        best = std::max(best, inst.dist(a, p) + inst.dist(p, b));
    }
    TieSet<ThirdCandidate> ties;
    for (PointId p = 0; p < inst.size(); ++p) {
        if (p == a || p == b) continue;
        const double g = inst.dist(a, p) + inst.dist(p, b);
        if (g >= best - eps) ties.candidates.push_back({p, g});
    }
    ties.chosen = 0;
    return ties;
}

namespace detail {

inline std::vector<PointId> points_outside(const Instance& inst, const Tour& t) {
    std::vector<char> on(static_cast<std::size_t>(inst.size()), 0);
    for (PointId id : t.order) {
        inst.require_id(id);
        on[static_cast<std::size_t>(id)] = 1;
    }
    std::vector<PointId> out;
    for (PointId p = 0; p < inst.size(); ++p) {
        if (!on[static_cast<std::size_t>(p)]) out.push_back(p);
    }
    return out;
}

}  // namespace detail

/// One adding step, max-min rule: per tour edge, the outside point of
/// minimum disturbance; across edges, the maximum of those minima. The tie
/// set holds every (edge, point) whose edge qualifies within eps of the
/// max-of-mins, including per-edge ties for the inner minimum. Candidates
/// are ordered by (edge position, point id); the default pick is index 0.
///
/// `min_delta_seen`, when given, receives the smallest disturbance scanned
/// anywhere in the step (used to flag triangle-inequality violations).
inline TieSet<InsertionCandidate> maxmin_step(const Instance& inst, const Tour& t,
                                              double eps = kDefaultEps,
                                              double* min_delta_seen = nullptr) {
    const int m = t.size();
    if (m < 3) raise(ErrorKind::TourTooSmall, "adding step needs a tour of >= 3 points");
    const auto outside = detail::points_outside(inst, t);
    if (outside.empty()) raise(ErrorKind::TourComplete, "no points left to add");

    std::vector<double> edge_min(static_cast<std::size_t>(m));
    double scanned_min = std::numeric_limits<double>::infinity();
    for (int k = 0; k < m; ++k) {
        const Edge e{t.order[static_cast<std::size_t>(k)],
                     t.order[static_cast<std::size_t>((k + 1) % m)]};
        double lo = std::numeric_limits<double>::infinity();
        for (PointId p : outside) {
            const double d = disturbance(inst, e, p);
            lo = std::min(lo, d);
        }
        edge_min[static_cast<std::size_t>(k)] = lo;
        scanned_min = std::min(scanned_min, lo);
    }
    const double target = *std::max_element(edge_min.begin(), edge_min.end());

    TieSet<InsertionCandidate> ties;
    for (int k = 0; k < m; ++k) {
        if (edge_min[static_cast<std::size_t>(k)] < target - eps) continue;
        const Edge e{t.order[static_cast<std::size_t>(k)],
                     t.order[static_cast<std::size_t>((k + 1) % m)]};
        for (PointId p : outside) {
            const double d = disturbance(inst, e, p);
            if (d <= edge_min[static_cast<std::size_t>(k)] + eps) {
                ties.candidates.push_back({k, e, p, d});
            }
        }
    }
    ties.chosen = 0;
    if (min_delta_seen) *min_delta_seen = scanned_min;
    return ties;
}

/// One adding step, min-min rule: the (edge, point) pairs within eps of the
/// globally minimal disturbance, ordered by (edge position, point id).
inline TieSet<InsertionCandidate> minmin_step(const Instance& inst, const Tour& t,
                                              double eps = kDefaultEps,
                                              double* min_delta_seen = nullptr) {
    const int m = t.size();
    if (m < 3) raise(ErrorKind::TourTooSmall, "adding step needs a tour of >= 3 points");
    const auto outside = detail::points_outside(inst, t);
    if (outside.empty()) raise(ErrorKind::TourComplete, "no points left to add");

    double lo = std::numeric_limits<double>::infinity();
    for (int k = 0; k < m; ++k) {
        const Edge e{t.order[static_cast<std::size_t>(k)],
                     t.order[static_cast<std::size_t>((k + 1) % m)]};
        for (PointId p : outside) {
            lo = std::min(lo, disturbance(inst, e, p));
        }
    }

    TieSet<InsertionCandidate> ties;
    for (int k = 0; k < m; ++k) {
        const Edge e{t.order[static_cast<std::size_t>(k)],
                     t.order[static_cast<std::size_t>((k + 1) % m)]};
        for (PointId p : outside) {
            const double d = disturbance(inst, e, p);
            if (d <= lo + eps) ties.candidates.push_back({k, e, p, d});
        }
    }
    ties.chosen = 0;
    if (min_delta_seen) *min_delta_seen = lo;
    return ties;
}

inline TieSet<InsertionCandidate> adding_step(const Instance& inst, const Tour& t, Variant v,
                                              double eps = kDefaultEps,
                                              double* min_delta_seen = nullptr) {
    return v == Variant::maxmin ? maxmin_step(inst, t, eps, min_delta_seen)
                                : minmin_step(inst, t, eps, min_delta_seen);
}

/// Applies an insertion candidate: the point goes between order[k] and
/// order[k+1 mod m].
inline Tour apply_insertion(const Tour& t, const InsertionCandidate& c) {
    Tour out = t;
    out.order.insert(out.order.begin() + c.edge_position + 1, c.point);
    return out;
}

/// Full record of one adding run: every tie set encountered, in order.
struct RunTrace {
    Variant variant = Variant::maxmin;
    double eps = kDefaultEps;
    TieSet<PairCandidate> initial_pair;
    TieSet<ThirdCandidate> initial_third;
    std::vector<TieSet<InsertionCandidate>> steps;
    Tour final_tour;
    double final_length = 0.0;
    bool negative_delta_seen = false;  // some scanned disturbance fell below -eps

    /// Points inserted by the per-step rule, in order (excludes the triangle).
    std::vector<PointId> insertion_order() const {
        std::vector<PointId> out;
        out.reserve(steps.size());
        for (const auto& s : steps) out.push_back(s.picked().point);
        return out;
    }
};

/// Runs the adding procedure to a complete tour. `choices`, when nonempty,
/// overrides the deterministic pick decision by decision: choices[0] indexes
/// the pair tie set, choices[1] the third-point tie set, choices[2+] the
/// insertion steps. Missing entries fall back to the default policy; this is
/// how a branch-enumeration path is replayed.
inline RunTrace run_adding(const Instance& inst, Variant variant, double eps = kDefaultEps,
                           std::span<const std::size_t> choices = {}) {
    RunTrace trace;
    trace.variant = variant;
    trace.eps = eps;

    std::size_t decision = 0;
    auto pick = [&](std::size_t tie_count) -> std::size_t {
        std::size_t idx = 0;
        if (decision < choices.size()) {
            idx = choices[decision];
            if (idx >= tie_count) {
                raise(ErrorKind::InvalidTour, "replay choice " + std::to_string(idx) +
                                                  " out of range at decision " + std::to_string(decision));
            }
        }
        ++decision;
        return idx;
    };

    trace.initial_pair = initial_pair(inst, eps);
    trace.initial_pair.chosen = pick(trace.initial_pair.size());
    const PairCandidate pair = trace.initial_pair.picked();

    trace.initial_third = initial_triangle(inst, pair.a, pair.b, eps);
    trace.initial_third.chosen = pick(trace.initial_third.size());
    const PointId third = trace.initial_third.picked().point;

    Tour tour{{pair.a, pair.b, third}};
    while (tour.size() < inst.size()) {
        double min_seen = 0.0;
        auto ties = adding_step(inst, tour, variant, eps, &min_seen);
        if (min_seen < -eps) trace.negative_delta_seen = true;
        ties.chosen = pick(ties.size());
        tour = apply_insertion(tour, ties.picked());
        trace.steps.push_back(std::move(ties));
    }
    trace.final_tour = tour;
    trace.final_length = tour_length(inst, tour);
    return trace;
}

/// Re-executes a trace's recorded choices; the result must equal the trace's
/// own final tour.
inline Tour replay_trace(const Instance& inst, const RunTrace& trace) {
    std::vector<std::size_t> choices;
    choices.push_back(trace.initial_pair.chosen);
    choices.push_back(trace.initial_third.chosen);
    for (const auto& s : trace.steps) choices.push_back(s.chosen);
    return run_adding(inst, trace.variant, trace.eps, choices).final_tour;
}

/// One cutting step: the tour point whose removal changes the length least
/// (by magnitude) is cut and its neighbors joined. Ties within eps are
/// recorded in ascending point-id order; the default policy picks the
/// smallest id, i.e. index 0.
inline std::pair<Tour, TieSet<CutCandidate>> cut_step(const Instance& inst, const Tour& t,
                                                      double eps = kDefaultEps) {
    const int m = t.size();
    if (m < 4) raise(ErrorKind::TourTooSmall, "cutting stops at a triangle");

    std::vector<CutCandidate> all;
    all.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        const PointId b = t.order[static_cast<std::size_t>(k)];
        const PointId a = t.order[static_cast<std::size_t>((k + m - 1) % m)];
        const PointId c = t.order[static_cast<std::size_t>((k + 1) % m)];
        inst.require_id(b);
        const double change = inst.dist(a, c) - inst.dist(a, b) - inst.dist(b, c);
        all.push_back({b, a, c, std::fabs(change), change});
    }
    std::sort(all.begin(), all.end(),
              [](const CutCandidate& x, const CutCandidate& y) { return x.point < y.point; });
    double lo = std::numeric_limits<double>::infinity();
    for (const auto& c : all) lo = std::min(lo, c.delta);

    TieSet<CutCandidate> ties;
    for (const auto& c : all) {
        if (c.delta <= lo + eps) ties.candidates.push_back(c);
    }
    ties.chosen = 0;

    const PointId cut = ties.picked().point;
    Tour reduced;
    reduced.order.reserve(static_cast<std::size_t>(m) - 1);
    for (PointId id : t.order) {
        if (id != cut) reduced.order.push_back(id);
    }
    return {reduced, ties};
}

/// Record of a full cutting run down to a triangle.
struct CutTrace {
    std::vector<TieSet<CutCandidate>> steps;
    std::vector<PointId> removal_order;
    std::vector<double> removal_deltas;
    Tour final_triangle;
};

inline CutTrace run_cutting(const Instance& inst, const Tour& t, double eps = kDefaultEps) {
    if (!tour_valid(inst, t, /*require_complete=*/true)) {
        raise(ErrorKind::InvalidTour, "cutting needs a complete valid tour");
    }
    CutTrace trace;
    Tour cur = t;
    while (cur.size() > 3) {
        auto [reduced, ties] = cut_step(inst, cur, eps);
        trace.removal_order.push_back(ties.picked().point);
        trace.removal_deltas.push_back(ties.picked().delta);
        trace.steps.push_back(std::move(ties));
        cur = std::move(reduced);
    }
    trace.final_triangle = cur;
    return trace;
}

}  // namespace ylab
