#include "extremal/candidates.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace extremal {

namespace {

constexpr double kRootWidth = 1e-13;
constexpr double kDegenerateTol = 1e-12;
constexpr double kBestTieTol = 1e-12;

void require_feasible(const Problem& p) {
    if (!p.nontrivial()) {
        throw std::invalid_argument("candidates require 0 <= t < m n");
    }
}

DiscreteDistribution ternary_law(double a, double p, double q, double r) {
    return DiscreteDistribution::make({{0.0, r}, {a, q}, {1.0, p}});
}

}  // namespace

DiscreteDistribution BinaryCandidate::distribution() const {
    return DiscreteDistribution::make({{a, 1.0 - pi}, {b, pi}});
}

DiscreteDistribution TernaryCandidate::distribution() const { return ternary_law(a, p, q, r); }

DiscreteDistribution CandidateSet::best_distribution() const {
    if (!best) {
        throw std::logic_error("candidate set is empty");
    }
    return best->kind == CandidateKind::Binary ? binary[best->index].distribution()
                                               : ternary[best->index].distribution();
}

std::vector<BinaryCandidate> binary_candidates(const Problem& pr) {
    require_feasible(pr);
    const int n = pr.n;
    const double m = pr.m;
    const double t = pr.t;
    const double ratio = t / m;
    // ceil(t/m) - 1 excludes j = t/m when the ratio is an integer.
    const int j_max = std::min(n - 1, std::max(0, static_cast<int>(std::ceil(ratio)) - 1));

    std::vector<BinaryCandidate> out;
    for (int j = 0; j <= j_max; ++j) {
        double a, b, pi;
        if (j <= t + kAtomTol) {
            // b pinned at 1, a as small as the support condition allows.
            a = std::max(0.0, (t - j) / (n - j));
            b = 1.0;
            pi = 1.0 - (1.0 - m) * (n - j) / (n - t);
        } else if (j < ratio) {
            a = 0.0;
            b = t / j;
            pi = j * m / t;
        } else {
            continue;
        }
        if (!(a >= 0.0 && a < m && m < b && b <= 1.0 && pi > 0.0 && pi < 1.0)) {
            continue;
        }
        out.push_back({j, a, b, pi, binom_cdf(n, pi, j)});
    }
    return out;
}

std::pair<double, double> ternary_p_range(double m, double a) {
    // q = (m - p)/a >= 0 and r = 1 - p - q >= 0.
    return {std::max(0.0, (m - a) / (1.0 - a)), m};
}

double linearity_defect(const Problem& pr, double a, double p) {
    const double q = (pr.m - p) / a;
    const double r = 1.0 - p - q;
    const SumDistribution partial = iid_sum(ternary_law(a, p, q, r), pr.n - 1);
    const double t = pr.t;
    return (1.0 - a) * partial.interval_prob(t - a, t) - a * partial.interval_prob(t - 1.0, t - a);
}

std::vector<TernaryCandidate> ternary_candidates(const Problem& pr, int scan_cells) {
    require_feasible(pr);
    if (scan_cells < 1) {
        throw std::invalid_argument("scan_cells must be >= 1");
    }
    std::vector<TernaryCandidate> out;
    const int n = pr.n;
    const double t = pr.t;
    for (int k = 1; k <= n - 1; ++k) {
        for (int l = 0; l + k <= n - 1; ++l) {
            if (!(l < t && t < l + k)) continue;
            const double a = (t - l) / k;
            const auto [lo, hi] = ternary_p_range(pr.m, a);
            if (lo > hi) continue;

            auto g = [&](double p) { return linearity_defect(pr, a, p); };
            std::vector<double> roots;
            std::vector<double> grid(static_cast<std::size_t>(scan_cells) + 1);
            std::vector<double> values(grid.size());
            for (std::size_t i = 0; i < grid.size(); ++i) {
                grid[i] = i == grid.size() - 1 ? hi : lo + (hi - lo) * (static_cast<double>(i) / scan_cells);
                values[i] = g(grid[i]);
            }
            for (std::size_t i = 0; i < grid.size(); ++i) {
                if (values[i] == 0.0) {
                    roots.push_back(grid[i]);
                    continue;
                }
                if (i + 1 < grid.size() && values[i + 1] != 0.0 && (values[i] < 0.0) != (values[i + 1] < 0.0)) {
                    double left = grid[i], right = grid[i + 1];
                    double g_left = values[i];
                    for (int it = 0; it < 200 && right - left > kRootWidth; ++it) {
                        const double mid = 0.5 * (left + right);
                        const double g_mid = g(mid);
                        if (g_mid == 0.0) {
                            left = right = mid;
                            break;
                        }
                        if ((g_mid < 0.0) == (g_left < 0.0)) {
                            left = mid;
                            g_left = g_mid;
                        } else {
                            right = mid;
                        }
                    }
                    roots.push_back(0.5 * (left + right));
                }
            }

            for (double p : roots) {
                double q = (pr.m - p) / a;
                double r = 1.0 - p - q;
                q = std::max(q, 0.0);
                r = std::max(r, 0.0);
                const DiscreteDistribution law = ternary_law(a, p, q, r);
                const double value = iid_sum(law, n).cdf_at(t);
                const bool degenerate = p <= kDegenerateTol || q <= kDegenerateTol || r <= kDegenerateTol;
                out.push_back({k, l, a, p, q, r, value, std::abs(g(p)), degenerate});
            }
        }
    }
    return out;
}

CandidateSet best_candidate(const Problem& pr) {
    CandidateSet cs;
    cs.binary = binary_candidates(pr);
    cs.ternary = ternary_candidates(pr);

    bool any = false;
    double top = 0.0;
    for (const auto& c : cs.binary) {
        if (!any || c.value > top) top = c.value;
        any = true;
    }
    for (const auto& c : cs.ternary) {
        if (!any || c.value > top) top = c.value;
        any = true;
    }
    if (!any) {
        return cs;
    }
    cs.best_value = top;
    for (std::size_t i = 0; i < cs.binary.size() && !cs.best; ++i) {
        if (cs.binary[i].value >= top - kBestTieTol) cs.best = CandidateRef{CandidateKind::Binary, i};
    }
    for (std::size_t i = 0; i < cs.ternary.size() && !cs.best; ++i) {
        if (cs.ternary[i].value >= top - kBestTieTol) cs.best = CandidateRef{CandidateKind::Ternary, i};
    }
    return cs;
}

}  // namespace extremal
