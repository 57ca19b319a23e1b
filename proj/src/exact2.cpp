#include "extremal/exact2.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace extremal {

std::string_view region_label(RegionN2 r) {
    switch (r) {
        case RegionN2::ZeroT: return "ZERO_T";
        case RegionN2::ZeroTOne: return "ZERO_T_ONE";
        case RegionN2::TMinus1One: return "TMINUS1_ONE";
        case RegionN2::HalfTOne: return "HALF_T_ONE";
        case RegionN2::Trivial: return "TRIVIAL";
    }
    return "UNKNOWN";
}

std::string SolveResult::region_string() const {
    std::string s;
    for (const Maximizer& mx : maximizers) {
        if (!s.empty()) s += '|';
        s += region_label(mx.region);
    }
    return s;
}

double m1_curve(double t) {
    if (!(t >= 0.8 && t <= 1.0)) {
        throw std::invalid_argument("m1_curve is defined for 4/5 <= t <= 1");
    }
    // Clamp the discriminant: at t = 4/5 rounding can push it just below 0.
    const double disc = std::max(0.0, t * (5.0 * t - 4.0));
    return (4.0 * t * t - (2.0 - t) * t * std::sqrt(disc)) / (5.0 * t * t - 4.0 * t + 4.0);
}

namespace {

std::optional<Maximizer> half_t_one(double m, double t) {
    const double w = 1.0 - t / 2.0;
    const double p_half = (1.0 - m) / w;
    return Maximizer{RegionN2::HalfTOne,
                     DiscreteDistribution::make({{t / 2.0, p_half}, {1.0, 1.0 - p_half}}),
                     p_half * p_half};
}

std::optional<Maximizer> zero_t(double m, double t) {
    if (!(m < t && t <= 1.0)) {
        return std::nullopt;
    }
    const double r = m / t;
    return Maximizer{RegionN2::ZeroT, DiscreteDistribution::make({{0.0, 1.0 - r}, {t, r}}), 1.0 - r * r};
}

std::optional<Maximizer> zero_t_one(double m, double t) {
    if (!(t > 0.0 && t < 1.0 && m >= t * t)) {
        return std::nullopt;
    }
    const double d = 1.0 - t * t;
    const double p0 = (1.0 - m) * (1.0 - t) / d;
    const double pt = (1.0 - m) * t / d;
    return Maximizer{RegionN2::ZeroTOne,
                     DiscreteDistribution::make({{0.0, p0}, {t, pt}, {1.0, 1.0 - p0 - pt}}),
                     (1.0 - m) * (1.0 - m) / d};
}

std::optional<Maximizer> tminus1_one(double m, double t) {
    if (!(t >= 1.0 && t < 2.0)) {
        return std::nullopt;
    }
    const double w = 2.0 - t;
    const double p_one = (1.0 + m - t) / w;
    return Maximizer{RegionN2::TMinus1One,
                     DiscreteDistribution::make({{t - 1.0, 1.0 - p_one}, {1.0, p_one}}),
                     1.0 - p_one * p_one};
}

}  // namespace

SolveResult solve_n2(const Problem& p) {
    if (p.n != 2) {
        throw std::invalid_argument("solve_n2 requires n = 2");
    }
    const double m = p.m;
    const double t = p.t;
    if (!p.nontrivial()) {
        return SolveResult{p, 1.0, {Maximizer{RegionN2::Trivial, DiscreteDistribution::point_mass(m), 1.0}}};
    }

    // Output order: {t/2,1} first, then the remaining families. When two
    // families produce the same law, the earlier one keeps its label.
    const std::array<std::optional<Maximizer>, 4> families{
        half_t_one(m, t), zero_t(m, t), zero_t_one(m, t), tminus1_one(m, t)};

    double best = 0.0;
    for (const auto& f : families) {
        if (f && f->value > best) best = f->value;
    }

    std::vector<Maximizer> winners;
    for (const auto& f : families) {
        if (!f || f->value < best - kTieTol) continue;
        bool duplicate = false;
        for (const Maximizer& w : winners) {
            if (w.distribution.approx_equal(f->distribution, 1e-9)) duplicate = true;
        }
        if (!duplicate) winners.push_back(*f);
    }
    return SolveResult{p, best, std::move(winners)};
}

RegionN2 table_region(double m, double t) {
    if (t >= 2.0 * m) return RegionN2::Trivial;
    if (t >= 0.8 && t <= 1.0 && m1_curve(t) <= m && m <= t * t) return RegionN2::ZeroT;
    if (t >= 0.8 && t < std::sqrt(m)) return RegionN2::ZeroTOne;
    if (t >= 1.0 && t <= 2.0 && 5.0 * m > 2.0 * t + 1.0) return RegionN2::TMinus1One;
    return RegionN2::HalfTOne;
}

}  // namespace extremal
