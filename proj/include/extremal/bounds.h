#pragma once

#include <optional>

#include "extremal/distribution.h"

namespace extremal {

/// Markov bound (1-m)/(1-t) on P(X <= t) for a single summand. Attained by
/// the two-point law {t:(1-m)/(1-t), 1:(m-t)/(1-t)}. Requires 0 <= t < m < 1.
double markov_bound(double m, double t);

/// Hoeffding's moment-generating-function bound on P(S_n <= t),
///   ((1-m)/(1-t/n))^(n-t) * (m/(t/n))^t,
/// for 0 <= t < m*n. At t = 0 the continuous limit (1-m)^n is returned.
double hoeffding_bound(const Problem& p);

/// Hoeffding-Shrikande bound for n = 2 moved to the left tail: with
/// c = (2-t)/(1-m) it is 1 for c <= 2, 4/c^2 for 2 <= c <= 5/2 and
/// 2/c - 1/c^2 beyond.
double hs_bound(double m, double t);

struct BoundReport {
    std::optional<double> markov;  // n == 1 only
    double hoeffding;
    std::optional<double> hs;  // n == 2 only
};

/// All bounds that apply to p. Requires p.nontrivial().
BoundReport bound_report(const Problem& p);

}  // namespace extremal
