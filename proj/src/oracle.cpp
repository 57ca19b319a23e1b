#include "extremal/oracle.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "extremal/candidates.h"
#include "extremal/text.h"

namespace extremal {

namespace {

constexpr int kGoldenIters = 40;

// Up to three support points with their weights; unused slots are zero.
struct Incumbent {
    double value = -1.0;
    int size = 0;
    std::array<double, 3> x{};
    std::array<double, 3> p{};
};

// Strict total order: larger value, then smaller support, then smaller weights.
bool better(const Incumbent& a, const Incumbent& b) {
    if (a.value != b.value) return a.value > b.value;
    const int k = std::min(a.size, b.size);
    for (int i = 0; i < k; ++i) {
        if (a.x[i] != b.x[i]) return a.x[i] < b.x[i];
    }
    if (a.size != b.size) return a.size < b.size;
    for (int i = 0; i < a.size; ++i) {
        if (a.p[i] != b.p[i]) return a.p[i] < b.p[i];
    }
    return false;
}

// P(S_n <= t) for a fixed support of two or three points, as a polynomial
// in the weights. The count vectors landing at or below t are found once;
// evaluation then only needs powers of the weights.
class SupportObjective {
public:
    SupportObjective(const std::vector<double>& log_factorial, std::span<const double> xs, int n, double t)
        : n_(n), size_(static_cast<int>(xs.size())) {
        const int c2_max = size_ == 3 ? n : 0;
        for (int c2 = 0; c2 <= c2_max; ++c2) {
            for (int c1 = 0; c1 + c2 <= n; ++c1) {
                const int c0 = n - c1 - c2;
                double s = c0 * xs[0] + c1 * xs[1];
                if (size_ == 3) s += c2 * xs[2];
                if (s > t + kAtomTol) continue;
                const double coef = std::exp(log_factorial[n] - log_factorial[c0] - log_factorial[c1] - log_factorial[c2]);
                terms_.push_back({static_cast<double>(std::round(coef)), c0, c1, c2});
            }
        }
    }

    double operator()(std::span<const double> ps) const {
        if (terms_.empty()) return 0.0;
        std::array<std::array<double, 64>, 3> pw;
        for (int i = 0; i < size_; ++i) {
            pw[i][0] = 1.0;
            for (int c = 1; c <= n_; ++c) pw[i][c] = pw[i][c - 1] * ps[i];
        }
        double s = 0.0;
        for (const Term& term : terms_) {
            double v = term.coef * pw[0][term.c0] * pw[1][term.c1];
            if (size_ == 3) v *= pw[2][term.c2];
            s += v;
        }
        return s;
    }

private:
    struct Term {
        double coef;
        int c0, c1, c2;
    };
    int n_;
    int size_;
    std::vector<Term> terms_;
};

class Search {
public:
    Search(const Problem& p, const OracleConfig& cfg) : p_(p), cfg_(cfg) {
        log_factorial_.assign(static_cast<std::size_t>(p.n) + 1, 0.0);
        for (int i = 1; i <= p.n; ++i) log_factorial_[i] = log_factorial_[i - 1] + std::log(static_cast<double>(i));
        build_pool();
    }

    const std::vector<double>& pool() const { return pool_; }

    // Best weights for a fixed support; `evals` counts objective calls.
    Incumbent optimize(std::span<const double> xs, std::int64_t& evals) const {
        const SupportObjective f(log_factorial_, xs, p_.n, p_.t);
        Incumbent inc;
        inc.size = static_cast<int>(xs.size());
        std::copy(xs.begin(), xs.end(), inc.x.begin());
        const double m = p_.m;
        if (xs.size() == 2) {
            const double pb = (m - xs[0]) / (xs[1] - xs[0]);
            const std::array<double, 2> ps{1.0 - pb, pb};
            inc.value = f(ps);
            inc.p = {ps[0], ps[1], 0.0};
            ++evals;
            return inc;
        }
        const double a = xs[0], b = xs[1], c = xs[2];
        const double lo = std::max(0.0, (m - b) / (c - b));
        const double hi = (m - a) / (c - a);
        if (lo > hi) return inc;
        auto weights = [&](double pc) {
            const double pb = std::max(0.0, (m - a - pc * (c - a)) / (b - a));
            const double pa = std::max(0.0, 1.0 - pb - pc);
            return std::array<double, 3>{pa, pb, pc};
        };
        auto eval = [&](double pc) {
            ++evals;
            const auto ws = weights(pc);
            return f(ws);
        };
        auto consider = [&](double pc, double v) {
            if (v > inc.value) {
                inc.value = v;
                inc.p = weights(pc);
            }
        };

        const int steps = cfg_.prob_steps;
        int best_i = 0;
        double best_v = -1.0;
        for (int i = 0; i <= steps; ++i) {
            const double pc = i == steps ? hi : lo + (hi - lo) * (static_cast<double>(i) / steps);
            const double v = eval(pc);
            consider(pc, v);
            if (v > best_v) {
                best_v = v;
                best_i = i;
            }
        }
        // Golden-section refinement inside the neighbouring cells.
        auto at = [&](int i) {
            i = std::clamp(i, 0, steps);
            return i == steps ? hi : lo + (hi - lo) * (static_cast<double>(i) / steps);
        };
        double left = at(best_i - 1), right = at(best_i + 1);
        const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
        double x1 = right - inv_phi * (right - left);
        double x2 = left + inv_phi * (right - left);
        double f1 = eval(x1), f2 = eval(x2);
        consider(x1, f1);
        consider(x2, f2);
        for (int it = 0; it < kGoldenIters; ++it) {
            if (f1 > f2) {
                right = x2;
                x2 = x1;
                f2 = f1;
                x1 = right - inv_phi * (right - left);
                f1 = eval(x1);
                consider(x1, f1);
            } else {
                left = x1;
                x1 = x2;
                f1 = f2;
                x2 = left + inv_phi * (right - left);
                f2 = eval(x2);
                consider(x2, f2);
            }
        }
        return inc;
    }

    // Phases 1 and 2 over pool indices i with i % stride == offset.
    Incumbent exhaustive(std::size_t offset, std::size_t stride, std::int64_t& evals) const {
        Incumbent best;
        const std::size_t k = pool_.size();
        const double m = p_.m;
        for (std::size_t i = offset; i < k; i += stride) {
            if (!(pool_[i] < m)) continue;
            for (std::size_t j = i + 1; j < k; ++j) {
                if (pool_[j] > m) {
                    const std::array<double, 2> xs{pool_[i], pool_[j]};
                    const Incumbent c = optimize(xs, evals);
                    if (better(c, best)) best = c;
                }
                for (std::size_t l = j + 1; l < k; ++l) {
                    if (!(pool_[l] > m)) continue;
                    const std::array<double, 3> xs{pool_[i], pool_[j], pool_[l]};
                    const Incumbent c = optimize(xs, evals);
                    if (better(c, best)) best = c;
                }
            }
        }
        return best;
    }

    Incumbent refine(Incumbent inc, std::int64_t& evals) const {
        const double m = p_.m;
        double h = 1.0 / cfg_.grid_n;
        for (int round = 0; round < cfg_.refine_iters; ++round, h /= 2.0) {
            for (int c = 0; c < inc.size; ++c) {
                for (double dir : {-1.0, 1.0}) {
                    for (int moves = 0; moves < 2 * cfg_.grid_n; ++moves) {
                        std::array<double, 3> xs = inc.x;
                        xs[c] += dir * h;
                        if (xs[c] < 0.0 || xs[c] > 1.0) break;
                        bool ordered = true;
                        for (int i = 0; i + 1 < inc.size; ++i) {
                            if (!(xs[i + 1] - xs[i] > kAtomTol)) ordered = false;
                        }
                        if (!ordered || !(xs[0] < m && xs[inc.size - 1] > m)) break;
                        const Incumbent trial = optimize(std::span<const double>(xs.data(), inc.size), evals);
                        if (trial.value > inc.value) {
                            inc = trial;
                        } else {
                            break;
                        }
                    }
                }
            }
        }
        return inc;
    }

private:
    void build_pool() {
        const int N = cfg_.grid_n;
        const double t = p_.t;
        for (int i = 0; i <= N; ++i) {
            const double g = static_cast<double>(i) / N;
            pool_.push_back(g);
            if (t - g >= 0.0 && t - g <= 1.0) pool_.push_back(t - g);
        }
        pool_.push_back(p_.m);
        if (t / 2.0 <= 1.0) pool_.push_back(t / 2.0);
        if (t >= 1.0 && t - 1.0 <= 1.0) pool_.push_back(t - 1.0);
        std::sort(pool_.begin(), pool_.end());
        std::vector<double> unique;
        for (double v : pool_) {
            if (unique.empty() || v - unique.back() > kAtomTol) unique.push_back(v);
        }
        pool_ = std::move(unique);
    }

    Problem p_;
    OracleConfig cfg_;
    std::vector<double> log_factorial_;
    std::vector<double> pool_;
};

DiscreteDistribution to_distribution(const Incumbent& inc) {
    std::vector<Atom> atoms;
    double total = 0.0;
    for (int i = 0; i < inc.size; ++i) total += inc.p[i];
    for (int i = 0; i < inc.size; ++i) atoms.push_back({inc.x[i], inc.p[i] / total});
    return DiscreteDistribution::make(std::move(atoms));
}

}  // namespace

OracleResult oracle_search(const Problem& p, const OracleConfig& cfg) {
    if (cfg.grid_n < 2 || cfg.prob_steps < 2 || cfg.refine_iters < 0) {
        throw std::invalid_argument("oracle config requires grid_n >= 2, prob_steps >= 2, refine_iters >= 0");
    }
    if (p.n > 63) {
        throw std::invalid_argument("oracle supports n <= 63");
    }
    const double budget = std::pow(static_cast<double>(cfg.grid_n), 3) * cfg.prob_steps;
    if (budget > kOracleBudget) {
        throw BudgetExceeded("oracle budget grid_n^3 * prob_steps = " + format_real(budget) + " exceeds 1e8");
    }
    if (!p.nontrivial()) {
        return OracleResult{1.0, DiscreteDistribution::point_mass(p.m), 0};
    }

    const Search search(p, cfg);
    unsigned threads = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads) : std::thread::hardware_concurrency();
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(search.pool().size())));

    std::vector<Incumbent> local(threads);
    std::vector<std::int64_t> evals(threads, 0);
    {
        std::vector<std::jthread> workers;
        for (unsigned w = 1; w < threads; ++w) {
            workers.emplace_back([&, w] { local[w] = search.exhaustive(w, threads, evals[w]); });
        }
        local[0] = search.exhaustive(0, threads, evals[0]);
    }
    Incumbent best;
    std::int64_t total_evals = 0;
    for (unsigned w = 0; w < threads; ++w) {
        if (better(local[w], best)) best = local[w];
        total_evals += evals[w];
    }
    if (best.size == 0) {
        throw std::logic_error("oracle found no feasible support");
    }
    best = search.refine(best, total_evals);
    return OracleResult{best.value, to_distribution(best), total_evals};
}

ScanReport conjecture_scan(int n, std::span<const std::pair<double, double>> grid, const OracleConfig& cfg) {
    ScanReport report{n, {}, 0.0, false};
    bool first = true;
    for (const auto& [m, t] : grid) {
        const Problem p = Problem::make(n, m, t);
        const CandidateSet cs = best_candidate(p);
        const OracleResult orc = oracle_search(p, cfg);
        const double excess = orc.value - cs.best_value;
        const bool flagged = excess > kCounterexampleTol;
        report.points.push_back({m, t, cs.best_value, orc.value, excess, format_distribution(orc.distribution), flagged});
        if (first || excess > report.max_excess) report.max_excess = excess;
        first = false;
        report.counterexample = report.counterexample || flagged;
    }
    return report;
}

}  // namespace extremal
