#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "extremal/distribution.h"

namespace extremal {

/// Support families of the extremal laws for two summands.
enum class RegionN2 {
    ZeroT,       // {0, t}
    ZeroTOne,    // {0, t, 1}
    TMinus1One,  // {t-1, 1}
    HalfTOne,    // {t/2, 1}
    Trivial,     // t >= 2m, point mass at m
};

std::string_view region_label(RegionN2 r);

struct Maximizer {
    RegionN2 region;
    DiscreteDistribution distribution;
    double value;
};

struct SolveResult {
    Problem problem;
    double value;
    /// One entry, or two on the boundary between {t/2,1} and another family.
    std::vector<Maximizer> maximizers;

    bool is_tie() const { return maximizers.size() > 1; }
    /// Labels joined by '|', e.g. "HALF_T_ONE|TMINUS1_ONE".
    std::string region_string() const;
};

/// Values closer than this are treated as a tie between two maximizers.
inline constexpr double kTieTol = 1e-12;

/// Boundary in the (t,m) plane between the {t/2,1} and {0,t} families,
/// defined on 4/5 <= t <= 1:
///   m_1(t) = (4t^2 - (2-t) t sqrt(t(5t-4))) / (5t^2 - 4t + 4).
double m1_curve(double t);

/// Exact maximum of P(S_2 <= t) over mean-m laws on [0,1], with all
/// maximizing distributions. Every family whose closed-form law is a valid
/// probability vector is evaluated and the largest value wins; the region
/// table only decides which families are worth evaluating.
SolveResult solve_n2(const Problem& p);

/// The region read straight off the summary table, first matching row
/// wins. Used to cross-check solve_n2 away from region boundaries.
RegionN2 table_region(double m, double t);

}  // namespace extremal
