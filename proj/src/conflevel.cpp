#include "extremal/conflevel.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "extremal/bounds.h"
#include "extremal/candidates.h"
#include "extremal/exact2.h"

namespace extremal {

std::string_view method_label(ConfMethod m) {
    return m == ConfMethod::ExactN2 ? "EXACT_N2" : "CANDIDATE_HEURISTIC";
}

double conf_value_function(int n, double m, double t) {
    const Problem p = Problem::make(n, m, t);
    if (!p.nontrivial()) return 1.0;
    if (n == 1) return markov_bound(m, t);
    if (n == 2) return solve_n2(p).value;
    return best_candidate(p).best_value;
}

ConfidenceResult upper_conf_bound(int n, double t, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("alpha must lie in (0,1)");
    }
    if (n < 1) {
        throw std::invalid_argument("n must be >= 1");
    }
    if (!(t >= 0.0 && t < n)) {
        throw std::invalid_argument("t must satisfy 0 <= t < n");
    }
    const ConfMethod method = n <= 2 ? ConfMethod::ExactN2 : ConfMethod::CandidateHeuristic;
    auto f = [&](double m) { return conf_value_function(n, m, t); };

    double lo = std::max(t / n, 0.0) + kConfEps;
    double hi = 1.0 - kConfEps;
    const double f_hi = f(hi);
    if (f_hi > alpha) {
        return ConfidenceResult{hi, alpha, f_hi, method, false};
    }
    const double f_lo = f(lo);
    if (f_lo <= alpha) {
        return ConfidenceResult{lo, alpha, f_lo, method, true};
    }
    // Invariant: f(lo) > alpha >= f(hi).
    double f_at_hi = f_hi;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = f(mid);
        if (fm > alpha) {
            lo = mid;
        } else {
            hi = mid;
            f_at_hi = fm;
        }
        if (hi - lo <= 1e-10 && alpha - f_at_hi <= 1e-9) break;
    }
    return ConfidenceResult{hi, alpha, f_at_hi, method, true};
}

}  // namespace extremal
