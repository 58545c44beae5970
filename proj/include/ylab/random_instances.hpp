#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ylab/instance.hpp"
#include "ylab/rng.hpp"

namespace ylab {

/// k*k points at integer coordinates (i, j), 0 <= i, j < k, unit spacing,
/// emitted row by row (id = j*k + i for the point (i, j)). Axis-aligned
/// distances are exact integers, so the grid's zero-disturbance ties are
/// exact in double precision.
inline Instance gen_grid(int k) {
    if (k < 2) raise(ErrorKind::TooFewPoints, "grid side must be >= 2, got " + std::to_string(k));
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(k) * k);
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i < k; ++i) {
            pts.push_back({static_cast<double>(i), static_cast<double>(j)});
        }
    }
    return Instance::from_points(std::move(pts), DistanceConvention::exact,
                                 "grid-" + std::to_string(k));
}

/// n points uniform in the unit square, drawn as x0,y0,x1,y1,... from a
/// SplitMix64 stream seeded with `seed`.
inline Instance gen_random_uniform(int n, std::uint64_t seed) {
    if (n < 3) raise(ErrorKind::TooFewPoints, "need at least 3 points, got " + std::to_string(n));
    SplitMix64 rng(seed);
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double x = rng.next_unit_double();
        const double y = rng.next_unit_double();
        pts.push_back({x, y});
    }
    return Instance::from_points(std::move(pts), DistanceConvention::exact,
                                 "uniform-" + std::to_string(n) + "-" + std::to_string(seed));
}

}  // namespace ylab
