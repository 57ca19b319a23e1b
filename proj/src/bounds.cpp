#include "extremal/bounds.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace extremal {

namespace {
double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }
}  // namespace

double markov_bound(double m, double t) {
    if (!(t >= 0.0 && t < m && m < 1.0)) {
        throw std::invalid_argument("markov_bound requires 0 <= t < m < 1");
    }
    return clamp01((1.0 - m) / (1.0 - t));
}

double hoeffding_bound(const Problem& p) {
    if (!p.nontrivial()) {
        throw std::invalid_argument("hoeffding_bound requires t < m*n");
    }
    const double n = p.n;
    if (p.t == 0.0) {
        return clamp01(std::pow(1.0 - p.m, n));
    }
    const double tn = p.t / n;
    // Log form keeps large n from overflowing the intermediate powers.
    const double log_bound = (n - p.t) * std::log((1.0 - p.m) / (1.0 - tn)) + p.t * std::log(p.m / tn);
    return clamp01(std::exp(log_bound));
}

double hs_bound(double m, double t) {
    if (!(m > 0.0 && m < 1.0)) {
        throw std::invalid_argument("hs_bound requires 0 < m < 1");
    }
    if (!(t >= 0.0 && t <= 2.0)) {
        throw std::invalid_argument("hs_bound requires 0 <= t <= 2");
    }
    const double c = (2.0 - t) / (1.0 - m);
    if (c <= 2.0) {
        return 1.0;
    }
    if (c <= 2.5) {
        return clamp01(4.0 / (c * c));
    }
    return clamp01(2.0 / c - 1.0 / (c * c));
}

BoundReport bound_report(const Problem& p) {
    BoundReport r{std::nullopt, hoeffding_bound(p), std::nullopt};
    if (p.n == 1) {
        r.markov = markov_bound(p.m, p.t);
    }
    if (p.n == 2) {
        r.hs = hs_bound(p.m, p.t);
    }
    return r;
}

}  // namespace extremal
