#pragma once

#include <string_view>

namespace extremal {

enum class ConfMethod {
    ExactN2,            // value function is exact (n <= 2)
    CandidateHeuristic, // n >= 3: best conjectured candidate stands in for p_n
};

std::string_view method_label(ConfMethod m);

struct ConfidenceResult {
    double m_u;
    double alpha;
    double achieved;  // value function at m_u
    ConfMethod method;
    bool root_found;
};

/// Clipping of the open m-interval (t/n, 1).
inline constexpr double kConfEps = 1e-9;

/// The value function used for inversion: closed forms for n <= 2, the
/// best candidate value for n >= 3. Returns 1 in the trivial regime.
double conf_value_function(int n, double m, double t);

/// Smallest m with p_n(m, t) <= alpha, found by bisection over
/// (t/n + eps, 1 - eps) using that p_n is non-increasing in m. On a flat
/// stretch at level alpha this is the left end of the root set. If even
/// m = 1 - eps leaves the value above alpha, root_found is false and m_u is
/// 1 - eps. Requires 0 < alpha < 1 and 0 <= t < n.
ConfidenceResult upper_conf_bound(int n, double t, double alpha);

}  // namespace extremal
