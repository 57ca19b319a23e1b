#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace extremal::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitInvalidInput = 2,
    kExitVerifyFailed = 3,
    kExitBudgetExceeded = 4,
};

/// Runs one command line (without the program name). The envelope goes to
/// `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Deterministic text form of a JSON value: keys sorted, two-space indent,
/// floats rendered with 17 significant digits.
std::string dump_envelope(const nlohmann::json& j);

struct ContourRow {
    double m;
    double t;
    double p2;
    double hoeffding;
    double ratio;
};

/// Points t = 2j/grid, m = i/grid with 0 < t < 2m and 0 < m < 1, ordered by
/// t then m. Requires grid >= 2.
std::vector<ContourRow> contour_rows(int grid);
void write_contour_csv(const std::vector<ContourRow>& rows, std::ostream& os);

struct RegionRow {
    double t;
    double m;
    std::string region;
};

/// Points t = 2j/grid (j = 0..grid), m = i/grid (i = 1..grid-1), ordered by
/// t then m. Trivial-regime points are labelled TRIVIAL.
std::vector<RegionRow> region_rows(int grid);
void write_regions_csv(const std::vector<RegionRow>& rows, std::ostream& os);

struct FalsifyWitness {
    int n;
    double t;
    double m;
    double p2;        // sup P(S_2 <= t)
    double binomial;  // b(2, m, t)
};

/// Witness (n=2, t=1/2, m) with b(2,m,t) < p_2(m,t) <= p0: m starts at t/2
/// and climbs in steps of 0.05 (halved whenever a step would reach 1) until
/// p_2 drops to p0. Throws std::invalid_argument unless 0 < p0 < 1, or if
/// p0 is too small to reach in double precision.
FalsifyWitness falsify(double p0);

}  // namespace extremal::cli
