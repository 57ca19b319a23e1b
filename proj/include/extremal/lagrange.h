#pragma once

#include "extremal/distribution.h"

namespace extremal {

/// Multipliers of the mean and mass constraints, normalized so that the
/// objective's multiplier times n equals 1.
struct Certificate {
    double lambda1;
    double lambda2;
};

/// Result of checking the necessary optimality conditions. `passed` means
/// the conditions hold to tolerance; it does not certify global optimality.
struct VerifyReport {
    Certificate certificate;
    bool fit_defined;             // false for single-atom inputs
    double max_violation_l1;      // max over checked x of max(0, -ell(x))
    double max_violation_l2;      // max over atoms of |ell(x)|
    bool support_condition_ok;    // t - x is an atom of S_{n-1} for every atom x != 1
    double implied_value;         // lambda1 - lambda2 * m, m taken from the Problem
    double direct_value;          // P(S_n <= t) computed by convolution
    bool passed;
};

inline constexpr double kL1Tol = 1e-10;
inline constexpr double kL2Tol = 1e-10;
inline constexpr double kSupportTol = 1e-9;
inline constexpr double kImpliedValueTol = 1e-9;
/// Offset used to probe both sides of each jump of ell.
inline constexpr double kJumpProbe = 1e-9;

/// ell(x) = lambda1 - lambda2 x - P(S_{n-1} <= t - x), where S_{n-1} is the
/// sum of n-1 draws from mu. Left-continuity in x follows from the weak
/// inequality in the CDF.
double ell_at(const DiscreteDistribution& mu, const Problem& p, const Certificate& cert, double x);

/// Least-squares line through (x, P(S_{n-1} <= t - x)) over the atoms of mu;
/// exact for two atoms. Throws std::invalid_argument for a single atom.
Certificate fit_certificate(const DiscreteDistribution& mu, const Problem& p);

/// Checks ell >= 0 on a uniform grid (points i/grid_points, i = 0..grid_points,
/// so doubling the resolution keeps every old point), at the atoms of mu, at
/// every jump location t - y and kJumpProbe either side of each; ell = 0 on
/// the atoms; the support condition for atoms other than 1; and the value
/// identity P(S_n <= t) = lambda1 - lambda2 m. Never throws on a failed check.
VerifyReport verify(const DiscreteDistribution& mu, const Problem& p, const Certificate& cert,
                    int grid_points = 1000);

/// fit_certificate followed by verify. A single-atom mu gives a report with
/// fit_defined = false and passed = false.
VerifyReport fit_and_verify(const DiscreteDistribution& mu, const Problem& p, int grid_points = 1000);

}  // namespace extremal
