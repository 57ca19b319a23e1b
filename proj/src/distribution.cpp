#include "extremal/distribution.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace extremal {

namespace {

// Sorts by location and folds atoms within kAtomTol of a group's first atom
// into that atom.
std::vector<Atom> sort_and_merge(std::vector<Atom> atoms) {
    std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return a.x < b.x; });
    std::vector<Atom> merged;
    merged.reserve(atoms.size());
    for (const Atom& a : atoms) {
        if (!merged.empty() && a.x - merged.back().x <= kAtomTol) {
            merged.back().p += a.p;
        } else {
            merged.push_back(a);
        }
    }
    return merged;
}

}  // namespace

DiscreteDistribution DiscreteDistribution::make(std::vector<Atom> pairs) {
    if (pairs.empty()) {
        throw std::invalid_argument("distribution has no atoms");
    }
    std::vector<Atom> kept;
    kept.reserve(pairs.size());
    double total = 0.0;
    for (const Atom& a : pairs) {
        if (!std::isfinite(a.x) || !std::isfinite(a.p)) {
            throw std::invalid_argument("distribution atom is not finite");
        }
        if (a.x < -kAtomTol || a.x > 1.0 + kAtomTol) {
            throw std::invalid_argument("atom location " + std::to_string(a.x) + " outside [0,1]");
        }
        if (a.p < -kMassTol) {
            throw std::invalid_argument("negative atom weight " + std::to_string(a.p));
        }
        // Rounding residue from closed-form weights counts as zero.
        if (a.p <= 0.0) {
            continue;
        }
        total += a.p;
        kept.push_back({std::clamp(a.x, 0.0, 1.0), a.p});
    }
    if (kept.empty()) {
        throw std::invalid_argument("distribution has no atoms with positive weight");
    }
    if (std::abs(total - 1.0) > kMassTol) {
        throw std::invalid_argument("weights sum to " + std::to_string(total) + ", not 1");
    }
    return DiscreteDistribution(sort_and_merge(std::move(kept)));
}

DiscreteDistribution DiscreteDistribution::point_mass(double x) {
    return make({{x, 1.0}});
}

double DiscreteDistribution::mean() const {
    double s = 0.0;
    for (const Atom& a : atoms_) {
        s += a.x * a.p;
    }
    return s;
}

bool DiscreteDistribution::approx_equal(const DiscreteDistribution& other, double tol) const {
    if (atoms_.size() != other.atoms_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (std::abs(atoms_[i].x - other.atoms_[i].x) > tol ||
            std::abs(atoms_[i].p - other.atoms_[i].p) > tol) {
            return false;
        }
    }
    return true;
}

SumDistribution::SumDistribution(std::vector<Atom> atoms) : atoms_(sort_and_merge(std::move(atoms))) {
    cumulative_.reserve(atoms_.size());
    double run = 0.0;
    for (const Atom& a : atoms_) {
        run += a.p;
        cumulative_.push_back(run);
    }
}

std::size_t SumDistribution::count_at_or_below(double t) const {
    const double limit = t + kAtomTol;
    auto it = std::upper_bound(atoms_.begin(), atoms_.end(), limit,
                               [](double v, const Atom& a) { return v < a.x; });
    return static_cast<std::size_t>(it - atoms_.begin());
}

double SumDistribution::cdf_at(double t) const {
    const std::size_t k = count_at_or_below(t);
    return k == 0 ? 0.0 : cumulative_[k - 1];
}

double SumDistribution::interval_prob(double u, double v) const {
    if (v < u) {
        throw std::invalid_argument("interval_prob requires u <= v");
    }
    const std::size_t lo = count_at_or_below(u);
    const std::size_t hi = count_at_or_below(v);
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
        s += atoms_[i].p;
    }
    return s;
}

double SumDistribution::mean() const {
    double s = 0.0;
    for (const Atom& a : atoms_) {
        s += a.x * a.p;
    }
    return s;
}

bool SumDistribution::has_atom_near(double x, double tol) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), x - tol,
                               [](const Atom& a, double v) { return a.x < v; });
    return it != atoms_.end() && it->x <= x + tol;
}

double count_vectors(int n, std::size_t k) {
    // C(n+k-1, k-1), built up incrementally.
    double c = 1.0;
    for (std::size_t i = 1; i < k; ++i) {
        c = c * static_cast<double>(n + static_cast<int>(i)) / static_cast<double>(i);
    }
    return c;
}

namespace {

struct CountVectorWalk {
    std::span<const Atom> atoms;
    std::vector<Atom>* out;

    // Distributes `remaining` draws over atoms[i..]. `weight` carries the
    // product of C(r, c) * p^c for the atoms already assigned.
    void walk(std::size_t i, int remaining, double value, double weight) const {
        const Atom& a = atoms[i];
        if (i + 1 == atoms.size()) {
            out->push_back({value + remaining * a.x, weight * std::pow(a.p, remaining)});
            return;
        }
        double coef = 1.0;  // C(remaining, c)
        double pw = 1.0;    // p^c
        for (int c = 0; c <= remaining; ++c) {
            if (c > 0) {
                coef = coef * static_cast<double>(remaining - c + 1) / static_cast<double>(c);
                pw *= a.p;
            }
            walk(i + 1, remaining - c, value + c * a.x, weight * coef * pw);
        }
    }
};

}  // namespace

SumDistribution iid_sum(const DiscreteDistribution& d, int n) {
    if (n < 0) {
        throw std::invalid_argument("iid_sum requires n >= 0");
    }
    if (n == 0) {
        return SumDistribution::point_mass(0.0);
    }
    const double vectors = count_vectors(n, d.size());
    if (vectors > kMaxCountVectors) {
        throw BudgetExceeded("iid_sum: " + std::to_string(vectors) + " count vectors exceed the budget");
    }
    std::vector<Atom> out;
    out.reserve(static_cast<std::size_t>(vectors));
    CountVectorWalk{d.atoms(), &out}.walk(0, n, 0.0, 1.0);
    return SumDistribution(std::move(out));
}

double binom_cdf(int n, double p, double x) {
    if (n < 0 || !(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("binom_cdf requires n >= 0 and p in [0,1]");
    }
    const double kf = std::floor(x + kAtomTol);
    if (kf < 0.0) {
        return 0.0;
    }
    if (kf >= n) {
        return 1.0;
    }
    const int k = static_cast<int>(kf);
    double s = 0.0;
    if (n <= 64) {
        double coef = 1.0;
        for (int i = 0; i <= k; ++i) {
            if (i > 0) {
                coef = coef * static_cast<double>(n - i + 1) / static_cast<double>(i);
            }
            s += coef * std::pow(p, i) * std::pow(1.0 - p, n - i);
        }
    } else {
        if (p == 0.0) {
            return 1.0;
        }
        if (p == 1.0) {
            return 0.0;  // k < n here
        }
        const double lp = std::log(p);
        const double lq = std::log1p(-p);
        for (int i = 0; i <= k; ++i) {
            const double lchoose = std::lgamma(n + 1.0) - std::lgamma(i + 1.0) - std::lgamma(n - i + 1.0);
            s += std::exp(lchoose + i * lp + (n - i) * lq);
        }
    }
    return std::min(s, 1.0);
}

Problem Problem::make(int n, double m, double t) {
    if (n < 1) {
        throw std::invalid_argument("n must be >= 1");
    }
    if (!(m > 0.0 && m < 1.0)) {
        throw std::invalid_argument("m must lie in (0,1)");
    }
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw std::invalid_argument("t must be finite and >= 0");
    }
    return Problem{n, m, t};
}

}  // namespace extremal
