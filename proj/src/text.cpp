#include "extremal/text.h"

#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace extremal {

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

double parse_number(std::string_view s, std::string_view pair) {
    s = trim(s);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument("malformed number in pair '" + std::string(pair) + "'");
    }
    return v;
}

}  // namespace

DiscreteDistribution parse_distribution(std::string_view text) {
    std::vector<Atom> atoms;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view pair = trim(text.substr(start, end - start));
        const std::size_t colon = pair.find(':');
        if (pair.empty() || colon == std::string_view::npos || pair.find(':', colon + 1) != std::string_view::npos) {
            throw std::invalid_argument("malformed pair '" + std::string(pair) + "', expected x:p");
        }
        atoms.push_back({parse_number(pair.substr(0, colon), pair), parse_number(pair.substr(colon + 1), pair)});
        start = end + 1;
    }
    return DiscreteDistribution::make(std::move(atoms));
}

std::string format_distribution(const DiscreteDistribution& d) {
    std::string out;
    for (const Atom& a : d.atoms()) {
        if (!out.empty()) out += ',';
        out += format_real(a.x);
        out += ':';
        out += format_real(a.p);
    }
    return out;
}

}  // namespace extremal
