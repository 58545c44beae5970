#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ylab/error.hpp"

namespace ylab {

/// Index into an instance's point list.
using PointId = std::int32_t;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline double euclidean(Point a, Point b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

/// TSPLIB EUC_2D nearest-integer rounding.
inline double euclidean_rounded(Point a, Point b) {
    return std::floor(euclidean(a, b) + 0.5);
}

/// How pairwise distances were derived from coordinates. `exact` keeps the
/// real Euclidean value; `rounded_euclidean` is the TSPLIB EUC_2D integer
/// convention. The two are never mixed inside one instance.
enum class DistanceConvention { exact, rounded_euclidean };

/// An adjacent pair of points on some tour.
struct Edge {
    PointId a = 0;
    PointId b = 0;
};

/// Cyclic visiting order. The last point connects back to the first.
struct Tour {
    std::vector<PointId> order;

    int size() const { return static_cast<int>(order.size()); }
    bool contains(PointId p) const {
        return std::find(order.begin(), order.end(), p) != order.end();
    }
};

/// Canonical form of a cyclic order: rotate the smallest id to the front,
/// then keep the lexicographically smaller of the two directions. Two orders
/// describe the same cyclic tour iff their canonical forms are equal.
inline std::vector<PointId> canonical_cycle(const std::vector<PointId>& order) {
    if (order.empty()) return {};
    const auto m = order.size();
    const auto min_it = std::min_element(order.begin(), order.end());
    const auto start = static_cast<std::size_t>(min_it - order.begin());
    std::vector<PointId> fwd(m), rev(m);
    for (std::size_t i = 0; i < m; ++i) {
        fwd[i] = order[(start + i) % m];
        rev[i] = order[(start + m - i) % m];
    }
    return std::min(fwd, rev);
}

inline Tour canonical_tour(const Tour& t) { return Tour{canonical_cycle(t.order)}; }

/// Problem input: n points with a symmetric nonnegative distance matrix.
/// Coordinates are optional; matrix-only instances support every solve
/// operation but no planar geometry.
class Instance {
public:
    /// Builds an instance from coordinates; fills the matrix with pairwise
    /// distances under the requested convention.
    static Instance from_points(std::vector<Point> points,
                                DistanceConvention convention = DistanceConvention::exact,
                                std::string name = "") {
        if (points.size() < 3) {
            raise(ErrorKind::TooFewPoints,
                  "need at least 3 points, got " + std::to_string(points.size()));
        }
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (!std::isfinite(points[i].x) || !std::isfinite(points[i].y)) {
                raise(ErrorKind::NonFiniteCoordinate, "point " + std::to_string(i));
            }
        }
        const int n = static_cast<int>(points.size());
        std::vector<double> d(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const double v = convention == DistanceConvention::exact
                                     ? euclidean(points[i], points[j])
                                     : euclidean_rounded(points[i], points[j]);
                d[static_cast<std::size_t>(i) * n + j] = v;
                d[static_cast<std::size_t>(j) * n + i] = v;
            }
        }
        return Instance(n, std::move(points), std::move(d), convention, std::move(name));
    }

    /// Builds a coordinate-free instance from a symmetric matrix with zero
    /// diagonal and nonnegative finite entries. Symmetry is checked exactly.
    static Instance from_matrix(const std::vector<std::vector<double>>& m,
                                std::string name = "") {
        const int n = static_cast<int>(m.size());
        for (const auto& row : m) {
            if (static_cast<int>(row.size()) != n) {
                raise(ErrorKind::NotSquare, "matrix rows must all have length " + std::to_string(n));
            }
        }
        if (n < 3) raise(ErrorKind::TooFewPoints, "need at least 3 points, got " + std::to_string(n));
        std::vector<double> d(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const double v = m[i][j];
                if (!std::isfinite(v)) {
                    raise(ErrorKind::NonFiniteDistance,
                          "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
                }
                if (v < 0.0) {
                    raise(ErrorKind::NegativeDistance,
                          "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
                }
                if (i == j && v != 0.0) {
                    raise(ErrorKind::NonzeroDiagonal, "entry (" + std::to_string(i) + ")");
                }
                if (m[j][i] != v) {
                    raise(ErrorKind::NotSymmetric,
                          "entries (" + std::to_string(i) + "," + std::to_string(j) + ")");
                }
                d[static_cast<std::size_t>(i) * n + j] = v;
            }
        }
        return Instance(n, std::nullopt, std::move(d), DistanceConvention::exact, std::move(name));
    }

    int size() const { return n_; }

    double dist(PointId i, PointId j) const {
        return dist_[static_cast<std::size_t>(i) * n_ + j];
    }

    bool has_coords() const { return coords_.has_value(); }

    const std::vector<Point>& coords() const {
        if (!coords_) raise(ErrorKind::CoordinatesRequired, "instance '" + name_ + "' is matrix-only");
        return *coords_;
    }

    Point coord(PointId i) const { return coords().at(static_cast<std::size_t>(i)); }

    DistanceConvention convention() const { return convention_; }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    bool valid_id(PointId i) const { return i >= 0 && i < n_; }

    void require_id(PointId i) const {
        if (!valid_id(i)) raise(ErrorKind::InvalidPointId, "id " + std::to_string(i));
    }

private:
    Instance(int n, std::optional<std::vector<Point>> coords, std::vector<double> dist,
             DistanceConvention convention, std::string name)
        : n_(n),
          coords_(std::move(coords)),
          dist_(std::move(dist)),
          convention_(convention),
          name_(std::move(name)) {}

    int n_;
    std::optional<std::vector<Point>> coords_;
    std::vector<double> dist_;
    DistanceConvention convention_;
    std::string name_;
};

/// Sum of distances over consecutive cyclic pairs. A 2-point order counts its
/// single edge twice (out and back).
inline double tour_length(const Instance& inst, const Tour& t) {
    const auto m = t.order.size();
    for (PointId id : t.order) inst.require_id(id);
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        total += inst.dist(t.order[i], t.order[(i + 1) % m]);
    }
    return total;
}

enum class ViolationKind { duplicate_id, out_of_range_id, missing_point, too_short };

struct Violation {
    ViolationKind kind;
    PointId id;  // offending point, or -1 for structural violations
};

/// Structural tour checks. Violations are returned, never thrown.
inline std::vector<Violation> validate_tour(const Instance& inst, const Tour& t,
                                            bool require_complete = false) {
    std::vector<Violation> out;
    if (t.order.size() < 2) out.push_back({ViolationKind::too_short, -1});
    std::vector<char> seen(static_cast<std::size_t>(inst.size()), 0);
    for (PointId id : t.order) {
        if (!inst.valid_id(id)) {
            out.push_back({ViolationKind::out_of_range_id, id});
            continue;
        }
        if (seen[static_cast<std::size_t>(id)]) {
            out.push_back({ViolationKind::duplicate_id, id});
        }
        seen[static_cast<std::size_t>(id)] = 1;
    }
    if (require_complete) {
        for (PointId id = 0; id < inst.size(); ++id) {
            if (!seen[static_cast<std::size_t>(id)]) out.push_back({ViolationKind::missing_point, id});
        }
    }
    return out;
}

inline bool tour_valid(const Instance& inst, const Tour& t, bool require_complete = false) {
    return validate_tour(inst, t, require_complete).empty();
}

}  // namespace ylab
