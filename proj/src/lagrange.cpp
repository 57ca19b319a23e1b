#include "extremal/lagrange.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace extremal {

namespace {

// ell with the law of S_{n-1} computed once.
class EllFunction {
public:
    EllFunction(const DiscreteDistribution& mu, const Problem& p, const Certificate& cert)
        : partial_(iid_sum(mu, p.n - 1)), t_(p.t), cert_(cert) {}

    double operator()(double x) const { return cert_.lambda1 - cert_.lambda2 * x - partial_.cdf_at(t_ - x); }

    const SumDistribution& partial() const { return partial_; }

private:
    SumDistribution partial_;
    double t_;
    Certificate cert_;
};

}  // namespace

double ell_at(const DiscreteDistribution& mu, const Problem& p, const Certificate& cert, double x) {
    return EllFunction(mu, p, cert)(x);
}

Certificate fit_certificate(const DiscreteDistribution& mu, const Problem& p) {
    if (mu.size() < 2) {
        throw std::invalid_argument("certificate fit needs at least two atoms");
    }
    const SumDistribution partial = iid_sum(mu, p.n - 1);
    // Fit y = lambda1 - lambda2 x by ordinary least squares.
    const double k = static_cast<double>(mu.size());
    double sx = 0.0, sy = 0.0;
    for (const Atom& a : mu.atoms()) {
        sx += a.x;
        sy += partial.cdf_at(p.t - a.x);
    }
    const double mx = sx / k;
    const double my = sy / k;
    double sxx = 0.0, sxy = 0.0;
    for (const Atom& a : mu.atoms()) {
        const double dx = a.x - mx;
        sxx += dx * dx;
        sxy += dx * (partial.cdf_at(p.t - a.x) - my);
    }
    if (sxx <= 0.0) {
        throw std::invalid_argument("certificate fit is singular");
    }
    const double slope = sxy / sxx;
    return Certificate{my - slope * mx, -slope};
}

VerifyReport verify(const DiscreteDistribution& mu, const Problem& p, const Certificate& cert, int grid_points) {
    if (grid_points < 2) {
        throw std::invalid_argument("verify requires grid_points >= 2");
    }
    const EllFunction ell(mu, p, cert);

    std::vector<double> points;
    points.reserve(static_cast<std::size_t>(grid_points) + 1 + 3 * (mu.size() + ell.partial().atoms().size()));
    for (int i = 0; i <= grid_points; ++i) {
        points.push_back(static_cast<double>(i) / grid_points);
    }
    auto add_with_probes = [&points](double x) {
        for (double y : {x - kJumpProbe, x, x + kJumpProbe}) {
            if (y >= 0.0 && y <= 1.0) points.push_back(y);
        }
    };
    for (const Atom& a : mu.atoms()) {
        add_with_probes(a.x);
    }
    for (const Atom& y : ell.partial().atoms()) {
        add_with_probes(p.t - y.x);
    }

    double l1 = 0.0;
    for (double x : points) {
        l1 = std::max(l1, -ell(x));
    }

    double l2 = 0.0;
    bool support_ok = true;
    for (const Atom& a : mu.atoms()) {
        l2 = std::max(l2, std::abs(ell(a.x)));
        // The support condition says nothing about the atom at 1.
        if (std::abs(a.x - 1.0) > kAtomTol && !ell.partial().has_atom_near(p.t - a.x, kSupportTol)) {
            support_ok = false;
        }
    }

    const double implied = cert.lambda1 - cert.lambda2 * p.m;
    const double direct = iid_sum(mu, p.n).cdf_at(p.t);
    const bool passed =
        l1 <= kL1Tol && l2 <= kL2Tol && support_ok && std::abs(implied - direct) <= kImpliedValueTol;
    return VerifyReport{cert, true, l1, l2, support_ok, implied, direct, passed};
}

VerifyReport fit_and_verify(const DiscreteDistribution& mu, const Problem& p, int grid_points) {
    if (mu.size() < 2) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        const double direct = iid_sum(mu, p.n).cdf_at(p.t);
        return VerifyReport{{nan, nan}, false, nan, nan, true, nan, direct, false};
    }
    return verify(mu, p, fit_certificate(mu, p), grid_points);
}

}  // namespace extremal
