#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "ylab/instance.hpp"

namespace ylab {

enum class OracleMethod { permutation, dp };

struct OptimalResult {
    Tour tour;       // canonical: starts at 0, direction with the smaller second id
    double length = 0.0;
    OracleMethod method = OracleMethod::permutation;
};

inline constexpr int kPermutationOracleLimit = 12;
inline constexpr int kDpOracleLimit = 20;

/// Exhaustive scan over the (n-1)!/2 canonical tours (point 0 fixed first,
/// second id smaller than last id). Ties in length keep the lexicographically
/// smallest canonical tour, which the ascending permutation scan yields for
/// free. The limit is a guard against accidental blowups; callers may raise
/// it at their own risk.
inline OptimalResult optimal_permutation(const Instance& inst, int max_n = kPermutationOracleLimit) {
    const int n = inst.size();
    if (n > max_n) {
        raise(ErrorKind::TooLarge,
              "permutation oracle limited to n <= " + std::to_string(max_n) + ", got " + std::to_string(n));
    }
    std::vector<PointId> perm(static_cast<std::size_t>(n) - 1);
    std::iota(perm.begin(), perm.end(), 1);

    std::vector<PointId> best;
    double best_len = std::numeric_limits<double>::infinity();
    do {
        if (perm.front() > perm.back()) continue;  // direction canonicalization
        double len = inst.dist(0, perm.front());
        for (std::size_t i = 0; i + 1 < perm.size(); ++i) {
            len += inst.dist(perm[i], perm[i + 1]);
        }
        len += inst.dist(perm.back(), 0);
        if (len < best_len) {
            best_len = len;
            best = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    Tour tour;
    tour.order.push_back(0);
    tour.order.insert(tour.order.end(), best.begin(), best.end());
    return {tour, tour_length(inst, tour), OracleMethod::permutation};
}

/// Held-Karp bitmask dynamic program. Same optimum as the permutation scan;
/// its tie-break may pick a different tour, never a different length.
inline OptimalResult optimal_dp(const Instance& inst, int max_n = kDpOracleLimit) {
    const int n = inst.size();
    if (n > max_n) {
        raise(ErrorKind::TooLarge,
              "dp oracle limited to n <= " + std::to_string(max_n) + ", got " + std::to_string(n));
    }
    const int r = n - 1;  // points 1..n-1; point 0 is the fixed endpoint
    const std::size_t full = std::size_t{1} << r;
    constexpr double inf = std::numeric_limits<double>::infinity();

    // dp[mask][j] = shortest path 0 -> (j+1) visiting exactly {i+1 : bit i of mask}
    std::vector<double> dp(full * static_cast<std::size_t>(r), inf);
    std::vector<std::int8_t> parent(full * static_cast<std::size_t>(r), -1);
    for (int j = 0; j < r; ++j) {
        dp[(std::size_t{1} << j) * static_cast<std::size_t>(r) + static_cast<std::size_t>(j)] =
            inst.dist(0, j + 1);
    }
    for (std::size_t mask = 1; mask < full; ++mask) {
        for (int j = 0; j < r; ++j) {
            if (!(mask & (std::size_t{1} << j))) continue;
            const double cur = dp[mask * static_cast<std::size_t>(r) + static_cast<std::size_t>(j)];
            if (cur == inf) continue;
            for (int k = 0; k < r; ++k) {
                if (mask & (std::size_t{1} << k)) continue;
                const std::size_t nxt = mask | (std::size_t{1} << k);
                double& slot = dp[nxt * static_cast<std::size_t>(r) + static_cast<std::size_t>(k)];
                const double cand = cur + inst.dist(j + 1, k + 1);
                if (cand < slot) {
                    slot = cand;
                    parent[nxt * static_cast<std::size_t>(r) + static_cast<std::size_t>(k)] =
                        static_cast<std::int8_t>(j);
                }
            }
        }
    }

    double best_len = inf;
    int best_end = 0;
    for (int j = 0; j < r; ++j) {
        const double cand =
            dp[(full - 1) * static_cast<std::size_t>(r) + static_cast<std::size_t>(j)] +
            inst.dist(j + 1, 0);
        if (cand < best_len) {
            best_len = cand;
            best_end = j;
        }
    }

    std::vector<PointId> path;
    std::size_t mask = full - 1;
    int j = best_end;
    while (j >= 0) {
        path.push_back(j + 1);
        const std::int8_t pj = parent[mask * static_cast<std::size_t>(r) + static_cast<std::size_t>(j)];
        mask &= ~(std::size_t{1} << j);
        j = pj;
    }
    std::reverse(path.begin(), path.end());

    Tour tour;
    tour.order.push_back(0);
    tour.order.insert(tour.order.end(), path.begin(), path.end());
    if (tour.order.size() > 2 && tour.order[1] > tour.order.back()) {
        std::reverse(tour.order.begin() + 1, tour.order.end());
    }
    return {tour, tour_length(inst, tour), OracleMethod::dp};
}

/// Picks the strongest oracle the instance size allows: the permutation scan
/// (with its strict lexicographic tie-break) up to 12 points, Held-Karp up
/// to 20.
inline OptimalResult optimal_tour(const Instance& inst) {
    if (inst.size() <= kPermutationOracleLimit) return optimal_permutation(inst);
    return optimal_dp(inst);
}

/// Relative excess over the optimum: (heuristic - optimal) / optimal.
inline double gap(double heuristic_length, double optimal_length) {
    if (!(optimal_length > 0.0)) {
        raise(ErrorKind::NonPositiveOptimal, "optimal length must be positive");
    }
    return (heuristic_length - optimal_length) / optimal_length;
}

}  // namespace ylab
