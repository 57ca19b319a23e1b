#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace extremal {

/// Tolerance for atom identity and for the weak inequality in "S_n <= t".
/// Extremal mass sits exactly on S_n = t, so comparisons must not lose it
/// to rounding.
inline constexpr double kAtomTol = 1e-12;

/// Tolerance on the total mass of a DiscreteDistribution.
inline constexpr double kMassTol = 1e-12;

/// Thrown when an enumeration or grid search would exceed its work budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Atom {
    double x;
    double p;
};

/// A probability measure on [0,1] with finitely many atoms, kept sorted by
/// location. Immutable after construction.
class DiscreteDistribution {
public:
    /// Validates and normalizes the representation of `pairs`:
    /// zero-weight atoms are dropped and atoms closer than kAtomTol are
    /// merged. Weights are never rescaled; they must already sum to 1.
    /// Throws std::invalid_argument on locations outside [0,1], negative
    /// weights, a bad total, or an empty result.
    static DiscreteDistribution make(std::vector<Atom> pairs);

    static DiscreteDistribution point_mass(double x);

    std::span<const Atom> atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    double min_atom() const { return atoms_.front().x; }
    double max_atom() const { return atoms_.back().x; }

    /// Sum of x*p, accumulated left to right over the ordered atoms.
    double mean() const;

    /// True if both have the same number of atoms and every location and
    /// weight agrees within `tol`.
    bool approx_equal(const DiscreteDistribution& other, double tol) const;

private:
    explicit DiscreteDistribution(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}
    std::vector<Atom> atoms_;
};

/// Materialized law of S_n = X_1 + ... + X_n.
class SumDistribution {
public:
    /// Sorts by value and merges values within kAtomTol. No mass check.
    explicit SumDistribution(std::vector<Atom> atoms);

    static SumDistribution point_mass(double x) { return SumDistribution({{x, 1.0}}); }

    std::span<const Atom> atoms() const { return atoms_; }

    /// P(S <= t), counting atoms with x <= t + kAtomTol.
    double cdf_at(double t) const;

    /// P(u < S <= v) with the same kAtomTol shift on both ends.
    double interval_prob(double u, double v) const;

    double total() const { return cumulative_.empty() ? 0.0 : cumulative_.back(); }
    double mean() const;

    /// True if some atom lies within `tol` of x.
    bool has_atom_near(double x, double tol) const;

private:
    std::size_t count_at_or_below(double t) const;

    std::vector<Atom> atoms_;
    std::vector<double> cumulative_;
};

/// Law of the sum of n i.i.d. copies of d, by enumerating count vectors
/// (c_1..c_k) with sum n and multinomial weights. n = 0 yields the point
/// mass at 0. Throws BudgetExceeded when C(n+k-1, k-1) > kMaxCountVectors.
inline constexpr double kMaxCountVectors = 1e7;
SumDistribution iid_sum(const DiscreteDistribution& d, int n);

/// Number of count vectors iid_sum would enumerate, as a double.
double count_vectors(int n, std::size_t k);

/// P(Bin(n,p) <= x), exact summation over i = 0..floor(x + kAtomTol).
double binom_cdf(int n, double p, double x);

/// One instance of the maximization problem: n i.i.d. summands of mean m
/// on [0,1], threshold t.
struct Problem {
    int n;
    double m;
    double t;

    /// Throws std::invalid_argument unless n >= 1, 0 < m < 1, t >= 0.
    static Problem make(int n, double m, double t);

    /// t < m*n; otherwise the point mass at m gives probability 1.
    bool nontrivial() const { return t < m * n; }
};

}  // namespace extremal
