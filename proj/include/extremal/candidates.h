#pragma once

#include <optional>
#include <vector>

#include "extremal/distribution.h"

namespace extremal {

/// Two-point candidate {a:1-pi, b:pi} whose support satisfies
/// t - a = j b + (n-1-j) a, so that P(S_n <= t) = P(Bin(n, pi) <= j).
struct BinaryCandidate {
    int j;
    double a;
    double b;
    double pi;  // P(X = b)
    double value;

    DiscreteDistribution distribution() const;
};

/// Three-point candidate on {0, a, 1} with a = (t - l)/k. The weights solve
/// the mean constraint and the requirement that P(S_{n-1} <= t - x) be
/// linear over x in {0, a, 1}.
struct TernaryCandidate {
    int k;
    int l;
    double a;
    double p;  // P(X = 1)
    double q;  // P(X = a)
    double r;  // P(X = 0)
    double value;
    double residual;  // |g(p)| at the accepted root
    bool degenerate;  // some weight is zero, so the support has fewer points

    DiscreteDistribution distribution() const;
};

enum class CandidateKind { Binary, Ternary };

struct CandidateRef {
    CandidateKind kind;
    std::size_t index;
};

struct CandidateSet {
    std::vector<BinaryCandidate> binary;
    std::vector<TernaryCandidate> ternary;
    std::optional<CandidateRef> best;
    double best_value = 0.0;

    /// Requires best.
    DiscreteDistribution best_distribution() const;
};

/// Binary candidates for j = 0 .. ceil(t/m) - 1 (j = 0 alone when t = 0).
/// Candidates violating 0 <= a < m < b <= 1 or 0 < pi < 1 are skipped.
/// Requires 0 <= t < m n.
std::vector<BinaryCandidate> binary_candidates(const Problem& p);

/// Linearity defect for support {0, a, 1} with P(X = 1) = p:
///   g(p) = (1-a) P(t-a < S_{n-1} <= t) - a P(t-1 < S_{n-1} <= t-a).
double linearity_defect(const Problem& pr, double a, double p);

/// Feasible range of P(X = 1) for support {0, a, 1} with mean m.
std::pair<double, double> ternary_p_range(double m, double a);

/// Ternary candidates for every (k >= 1, l >= 0) with l < t < l + k <= n-1.
/// Roots of g are located by a sign scan over `scan_cells` equal cells of
/// the feasible p-range and bisected to width 1e-13; every root is kept.
std::vector<TernaryCandidate> ternary_candidates(const Problem& p, int scan_cells = 1024);

/// Union of both families. best is the first candidate, in the order binary
/// by j then ternary by (k, l, p), whose value is within 1e-12 of the max.
CandidateSet best_candidate(const Problem& p);

}  // namespace extremal
