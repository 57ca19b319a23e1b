#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "extremal/bounds.h"
#include "extremal/candidates.h"
#include "extremal/cli.h"
#include "extremal/conflevel.h"
#include "extremal/exact2.h"
#include "extremal/lagrange.h"
#include "extremal/oracle.h"
#include "extremal/text.h"

namespace extremal::cli {

using nlohmann::json;

namespace {

json envelope(std::string command, json inputs, json result, json warnings = json::array()) {
    json e = json::object();
    e["command"] = std::move(command);
    e["inputs"] = std::move(inputs);
    e["result"] = std::move(result);
    e["warnings"] = std::move(warnings);
    return e;
}

json distribution_json(const DiscreteDistribution& d) { return format_distribution(d); }

json binary_json(const BinaryCandidate& c) {
    return {{"j", c.j}, {"a", c.a}, {"b", c.b}, {"pi", c.pi}, {"value", c.value},
            {"distribution", distribution_json(c.distribution())}};
}

json ternary_json(const TernaryCandidate& c) {
    return {{"k", c.k},         {"l", c.l},         {"a", c.a},
            {"p", c.p},         {"q", c.q},         {"r", c.r},
            {"value", c.value}, {"residual", c.residual}, {"degenerate", c.degenerate},
            {"distribution", distribution_json(c.distribution())}};
}

Problem feasible_problem(int n, double m, double t) {
    const Problem p = Problem::make(n, m, t);
    if (!p.nontrivial()) {
        throw std::invalid_argument("instance is in the trivial regime t >= m n");
    }
    return p;
}

json cmd_solve(int n, double m, double t) {
    if (n != 2) {
        throw std::invalid_argument("solve handles n = 2 only; use candidates for other n");
    }
    const SolveResult r = solve_n2(Problem::make(n, m, t));
    json maximizers = json::array();
    for (const Maximizer& mx : r.maximizers) {
        maximizers.push_back({{"region", std::string(region_label(mx.region))},
                              {"value", mx.value},
                              {"distribution", distribution_json(mx.distribution)}});
    }
    return envelope("solve", {{"n", n}, {"m", m}, {"t", t}},
                    {{"value", r.value}, {"region", r.region_string()}, {"tie", r.is_tie()},
                     {"maximizers", std::move(maximizers)}});
}

json cmd_candidates(int n, double m, double t) {
    const CandidateSet cs = best_candidate(feasible_problem(n, m, t));
    json binary = json::array();
    for (const auto& c : cs.binary) binary.push_back(binary_json(c));
    json ternary = json::array();
    for (const auto& c : cs.ternary) ternary.push_back(ternary_json(c));
    json result{{"binary", std::move(binary)}, {"ternary", std::move(ternary)}};
    json warnings = json::array();
    if (cs.best) {
        json best{{"value", cs.best_value}, {"distribution", distribution_json(cs.best_distribution())}};
        if (cs.best->kind == CandidateKind::Binary) {
            best["family"] = "binary";
            best["j"] = cs.binary[cs.best->index].j;
        } else {
            best["family"] = "ternary";
            best["k"] = cs.ternary[cs.best->index].k;
            best["l"] = cs.ternary[cs.best->index].l;
        }
        result["best"] = std::move(best);
        result["best_value"] = cs.best_value;
    } else {
        result["best"] = nullptr;
        warnings.push_back("no feasible candidate");
    }
    if (n >= 3) {
        warnings.push_back("for n >= 3 the best candidate is a lower bound that equals the supremum only if the "
                           "conjectured candidate families are complete");
    }
    return envelope("candidates", {{"n", n}, {"m", m}, {"t", t}}, std::move(result), std::move(warnings));
}

json cmd_bounds(int n, double m, double t) {
    const BoundReport b = bound_report(feasible_problem(n, m, t));
    json result{{"hoeffding", b.hoeffding}};
    if (b.markov) result["markov"] = *b.markov;
    if (b.hs) result["hs"] = *b.hs;
    return envelope("bounds", {{"n", n}, {"m", m}, {"t", t}}, std::move(result));
}

json cmd_oracle(int n, double m, double t, int grid, int prob_steps, int refine) {
    const OracleConfig cfg{grid, prob_steps, refine, 0};
    const OracleResult r = oracle_search(Problem::make(n, m, t), cfg);
    return envelope("oracle",
                    {{"n", n}, {"m", m}, {"t", t}, {"grid", grid}, {"prob-steps", prob_steps}, {"refine", refine}},
                    {{"value", r.value}, {"distribution", distribution_json(r.distribution)},
                     {"evaluations", r.evaluations}});
}

json cmd_confbound(int n, double t, double alpha) {
    const ConfidenceResult r = upper_conf_bound(n, t, alpha);
    json warnings = json::array();
    if (r.method == ConfMethod::CandidateHeuristic) {
        warnings.push_back("CANDIDATE_HEURISTIC: for n >= 3 the value function is the best conjectured candidate");
    }
    if (!r.root_found) {
        warnings.push_back("no root: the value function stays above alpha for every m < 1");
    }
    return envelope("confbound", {{"n", n}, {"t", t}, {"alpha", alpha}},
                    {{"m_u", r.m_u}, {"alpha", r.alpha}, {"achieved", r.achieved},
                     {"method", std::string(method_label(r.method))}, {"root_found", r.root_found}},
                    std::move(warnings));
}

json cmd_falsify(double p0) {
    const FalsifyWitness w = falsify(p0);
    return envelope("falsify", {{"p0", p0}},
                    {{"n", w.n}, {"t", w.t}, {"m", w.m}, {"p2", w.p2}, {"binomial", w.binomial},
                     {"bernoulli_dominated", w.binomial < w.p2}});
}

template <typename Row, typename Writer>
json write_csv(const std::string& command, int grid, const std::string& path, const std::vector<Row>& rows,
               Writer writer) {
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        throw std::invalid_argument("cannot open " + path + " for writing");
    }
    writer(rows, os);
    os.flush();
    if (!os) {
        throw std::invalid_argument("failed writing " + path);
    }
    return envelope(command, {{"grid", grid}, {"out", path}},
                    {{"rows", static_cast<std::int64_t>(rows.size())}, {"path", path}});
}

}  // namespace

FalsifyWitness falsify(double p0) {
    if (!(p0 > 0.0 && p0 < 1.0)) {
        throw std::invalid_argument("p0 must lie in (0,1)");
    }
    const double t = 0.5;
    double m = t / 2.0;
    double step = 0.05;
    // p_2 -> 0 as m -> 1, so the climb ends unless p0 is below what doubles
    // near 1 can resolve.
    for (;;) {
        if (step < 1e-16) {
            throw std::invalid_argument("p0 is too small to reach in double precision");
        }
        const double next = m + step;
        if (next >= 1.0) {
            step /= 2.0;
            continue;
        }
        m = next;
        const double p2 = solve_n2(Problem::make(2, m, t)).value;
        if (p2 <= p0 + kTieTol) {
            return FalsifyWitness{2, t, m, p2, binom_cdf(2, m, t)};
        }
    }
}

std::vector<ContourRow> contour_rows(int grid) {
    if (grid < 2) throw std::invalid_argument("grid must be >= 2");
    std::vector<ContourRow> rows;
    for (int j = 1; j < grid; ++j) {
        const double t = 2.0 * j / grid;
        for (int i = j + 1; i < grid; ++i) {
            const double m = static_cast<double>(i) / grid;
            const Problem p = Problem::make(2, m, t);
            const double p2 = solve_n2(p).value;
            const double h = hoeffding_bound(p);
            rows.push_back({m, t, p2, h, p2 / h});
        }
    }
    return rows;
}

void write_contour_csv(const std::vector<ContourRow>& rows, std::ostream& os) {
    os << "m,t,p2,hoeffding,ratio\n";
    for (const auto& r : rows) {
        os << format_real(r.m) << ',' << format_real(r.t) << ',' << format_real(r.p2) << ','
           << format_real(r.hoeffding) << ',' << format_real(r.ratio) << '\n';
    }
}

std::vector<RegionRow> region_rows(int grid) {
    if (grid < 2) throw std::invalid_argument("grid must be >= 2");
    std::vector<RegionRow> rows;
    for (int j = 0; j <= grid; ++j) {
        const double t = 2.0 * j / grid;
        for (int i = 1; i < grid; ++i) {
            const double m = static_cast<double>(i) / grid;
            rows.push_back({t, m, solve_n2(Problem::make(2, m, t)).region_string()});
        }
    }
    return rows;
}

void write_regions_csv(const std::vector<RegionRow>& rows, std::ostream& os) {
    os << "t,m,region\n";
    for (const auto& r : rows) {
        os << format_real(r.t) << ',' << format_real(r.m) << ',' << r.region << '\n';
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Extremal laws for P(S_n <= t) over i.i.d. mean-m summands on [0,1]", "extremal"};
    app.require_subcommand(1);

    int n = 2, verify_grid = 1000, oracle_grid = 50, csv_grid = 0, prob_steps = 64, refine = 3;
    double m = 0.0, t = 0.0, alpha = 0.0, p0 = 0.0;
    std::string dist, path;

    auto* solve = app.add_subcommand("solve", "exact solution for n = 2");
    solve->add_option("--n", n)->required();
    solve->add_option("--m", m)->required();
    solve->add_option("--t", t)->required();

    auto* candidates = app.add_subcommand("candidates", "conjectured binary and ternary candidates");
    candidates->add_option("--n", n)->required();
    candidates->add_option("--m", m)->required();
    candidates->add_option("--t", t)->required();

    auto* verify_cmd = app.add_subcommand("verify", "fit and check Lagrange multipliers for a distribution");
    verify_cmd->add_option("--n", n)->required();
    verify_cmd->add_option("--t", t)->required();
    verify_cmd->add_option("--dist", dist, "comma-separated x:p pairs")->required();
    verify_cmd->add_option("--grid", verify_grid, "grid resolution for the nonnegativity check")->default_val(1000);

    auto* bounds = app.add_subcommand("bounds", "Markov, Hoeffding and Hoeffding-Shrikande bounds");
    bounds->add_option("--n", n)->required();
    bounds->add_option("--m", m)->required();
    bounds->add_option("--t", t)->required();

    auto* oracle = app.add_subcommand("oracle", "brute-force search over 2- and 3-point laws");
    oracle->add_option("--n", n)->required();
    oracle->add_option("--m", m)->required();
    oracle->add_option("--t", t)->required();
    oracle->add_option("--grid", oracle_grid, "support grid resolution")->default_val(50);
    oracle->add_option("--prob-steps", prob_steps, "weight sweep steps")->default_val(64);
    oracle->add_option("--refine", refine, "refinement rounds")->default_val(3);

    auto* contour = app.add_subcommand("contour", "CSV of p_2 against the Hoeffding bound");
    contour->add_option("--grid", csv_grid)->required();
    contour->add_option("--out", path)->required();

    auto* regions = app.add_subcommand("regions", "CSV of n = 2 support families");
    regions->add_option("--grid", csv_grid)->required();
    regions->add_option("--out", path)->required();

    auto* confbound = app.add_subcommand("confbound", "upper confidence bound on m");
    confbound->add_option("--n", n)->required();
    confbound->add_option("--t", t)->required();
    confbound->add_option("--alpha", alpha)->required();

    auto* falsify_cmd = app.add_subcommand("falsify", "witness against Bernoulli optimality for small p");
    falsify_cmd->add_option("--p0", p0)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }

    try {
        json env;
        int code = kExitOk;
        if (solve->parsed()) {
            env = cmd_solve(n, m, t);
        } else if (candidates->parsed()) {
            env = cmd_candidates(n, m, t);
        } else if (verify_cmd->parsed()) {
            const DiscreteDistribution mu = parse_distribution(dist);
            if (mu.size() < 2) {
                throw std::invalid_argument("a single-atom distribution admits no certificate fit");
            }
            const Problem p = Problem::make(n, mu.mean(), t);
            const VerifyReport r = verify(mu, p, fit_certificate(mu, p), verify_grid);
            json warnings = json::array();
            if (!p.nontrivial()) warnings.push_back("instance is in the trivial regime t >= m n");
            env = envelope("verify", {{"n", n}, {"t", t}, {"dist", format_distribution(mu)}, {"grid", verify_grid}},
                           {{"m", p.m},
                            {"certificate", {{"lambda1", r.certificate.lambda1}, {"lambda2", r.certificate.lambda2}}},
                            {"max_violation_l1", r.max_violation_l1},
                            {"max_violation_l2", r.max_violation_l2},
                            {"support_condition_ok", r.support_condition_ok},
                            {"implied_value", r.implied_value},
                            {"direct_value", r.direct_value},
                            {"passed", r.passed}},
                           std::move(warnings));
            code = r.passed ? kExitOk : kExitVerifyFailed;
        } else if (bounds->parsed()) {
            env = cmd_bounds(n, m, t);
        } else if (oracle->parsed()) {
            env = cmd_oracle(n, m, t, oracle_grid, prob_steps, refine);
        } else if (contour->parsed()) {
            env = write_csv("contour", csv_grid, path, contour_rows(csv_grid), write_contour_csv);
        } else if (regions->parsed()) {
            env = write_csv("regions", csv_grid, path, region_rows(csv_grid), write_regions_csv);
        } else if (confbound->parsed()) {
            env = cmd_confbound(n, t, alpha);
        } else if (falsify_cmd->parsed()) {
            env = cmd_falsify(p0);
        }
        out << dump_envelope(env);
        return code;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitBudgetExceeded;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
}

}  // namespace extremal::cli
