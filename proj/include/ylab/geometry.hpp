#pragma once

#include <algorithm>
#include <cmath>

#include "ylab/instance.hpp"

namespace ylab {

/// Orientation band: determinants whose magnitude stays below
/// 1e-12 * max(1, term magnitudes) are snapped to collinear. Anything
/// outside the band is far above the ~4e-16 relative rounding error of the
/// 2x2 determinant, so its sign is certain.
inline constexpr double kOrientEps = 1e-12;

/// Sign of the oriented area of (a, b, c): +1 left turn, -1 right turn,
/// 0 collinear within the epsilon band.
inline int orientation(Point a, Point b, Point c) {
    const double t1 = (b.x - a.x) * (c.y - a.y);
    const double t2 = (b.y - a.y) * (c.x - a.x);
    const double det = t1 - t2;
    const double scale = std::max(1.0, std::fabs(t1) + std::fabs(t2));
    if (std::fabs(det) <= kOrientEps * scale) return 0;
    return det > 0.0 ? 1 : -1;
}

enum class SegmentRelation {
    none,              // closed segments do not meet
    proper,            // interiors cross in a single point
    endpoint_touch,    // meet in a single point involving an endpoint
    collinear_overlap  // collinear with a shared sub-segment
};

struct SegmentIntersection {
    SegmentRelation kind = SegmentRelation::none;
    Point where{};  // crossing point; midpoint of the shared stretch when collinear
};

namespace detail {

inline bool within_box(Point p, Point a, Point b) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

inline Point line_crossing_point(Point p1, Point p2, Point q1, Point q2) {
    const double rx = p2.x - p1.x, ry = p2.y - p1.y;
    const double sx = q2.x - q1.x, sy = q2.y - q1.y;
    const double denom = rx * sy - ry * sx;
    if (denom == 0.0) return p1;
    const double t = ((q1.x - p1.x) * sy - (q1.y - p1.y) * sx) / denom;
    return {p1.x + t * rx, p1.y + t * ry};
}

}  // namespace detail

/// Closed-segment intersection of (p1,p2) and (q1,q2), classified by kind.
inline SegmentIntersection segment_intersect(Point p1, Point p2, Point q1, Point q2) {
    const int d1 = orientation(q1, q2, p1);
    const int d2 = orientation(q1, q2, p2);
    const int d3 = orientation(p1, p2, q1);
    const int d4 = orientation(p1, p2, q2);

    if (d1 * d2 < 0 && d3 * d4 < 0) {
        return {SegmentRelation::proper, detail::line_crossing_point(p1, p2, q1, q2)};
    }

    if (d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0) {
        // All four points on one line: project on the dominant axis.
        const bool use_x = std::fabs(p2.x - p1.x) + std::fabs(q2.x - q1.x) >=
                           std::fabs(p2.y - p1.y) + std::fabs(q2.y - q1.y);
        auto key = [&](Point p) { return use_x ? p.x : p.y; };
        const double plo = std::min(key(p1), key(p2)), phi = std::max(key(p1), key(p2));
        const double qlo = std::min(key(q1), key(q2)), qhi = std::max(key(q1), key(q2));
        const double lo = std::max(plo, qlo), hi = std::min(phi, qhi);
        if (lo > hi) return {SegmentRelation::none, {}};
        auto at = [&](double k) -> Point {
            for (Point p : {p1, p2, q1, q2}) {
                if (key(p) == k) return p;
            }
            return p1;
        };
        const Point lo_pt = at(lo), hi_pt = at(hi);
        if (lo == hi) return {SegmentRelation::endpoint_touch, lo_pt};
        return {SegmentRelation::collinear_overlap,
                {(lo_pt.x + hi_pt.x) / 2.0, (lo_pt.y + hi_pt.y) / 2.0}};
    }

    // Non-proper touch: a collinear endpoint lying inside the other segment.
    if (d1 == 0 && detail::within_box(p1, q1, q2)) return {SegmentRelation::endpoint_touch, p1};
    if (d2 == 0 && detail::within_box(p2, q1, q2)) return {SegmentRelation::endpoint_touch, p2};
    if (d3 == 0 && detail::within_box(q1, p1, p2)) return {SegmentRelation::endpoint_touch, q1};
    if (d4 == 0 && detail::within_box(q2, p1, p2)) return {SegmentRelation::endpoint_touch, q2};
    return {SegmentRelation::none, {}};
}

}  // namespace ylab
