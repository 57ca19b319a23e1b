#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "extremal/distribution.h"

namespace extremal {

struct OracleConfig {
    int grid_n = 50;      // support grid resolution N
    int prob_steps = 64;  // sweep steps M for the free weight of a triple
    int refine_iters = 3; // coordinate-descent rounds on the incumbent
    int threads = 0;      // 0 = hardware concurrency
};

struct OracleResult {
    double value;
    DiscreteDistribution distribution;
    std::int64_t evaluations;
};

/// Largest budget grid_n^3 * prob_steps accepted by oracle_search.
inline constexpr double kOracleBudget = 1e8;

/// Brute-force search over two- and three-point laws with mean m.
///
/// Support points come from the pool {i/N} together with 0, 1, m, t/2,
/// t - i/N (when in [0,1]) and t - 1 (when t >= 1). Every pair a < m < b is
/// evaluated with its forced weights. Every triple a < b < c with a < m < c
/// has one free weight, P(X = c); it is swept over M equal steps of its
/// feasible interval and the best cell is refined by golden-section search.
/// Finally the incumbent's support points are nudged by +-1/N, halving the
/// step each round. Ties go to the lexicographically smaller support, so
/// the result does not depend on the thread count.
///
/// Throws BudgetExceeded if grid_n^3 * prob_steps > kOracleBudget, and
/// std::invalid_argument for a bad config.
OracleResult oracle_search(const Problem& p, const OracleConfig& cfg);

/// Excess of the oracle over the best conjectured candidate that counts as
/// a counterexample.
inline constexpr double kCounterexampleTol = 1e-6;

struct ScanPoint {
    double m;
    double t;
    double candidate_value;
    double oracle_value;
    double excess;  // oracle - candidate
    std::string oracle_distribution;
    bool counterexample;
};

struct ScanReport {
    int n;
    std::vector<ScanPoint> points;
    double max_excess;
    bool counterexample;
};

/// Compares best_candidate against oracle_search at every (m, t).
ScanReport conjecture_scan(int n, std::span<const std::pair<double, double>> grid, const OracleConfig& cfg);

}  // namespace extremal
