#pragma once

#include <string>
#include <string_view>

#include "extremal/distribution.h"

namespace extremal {

/// Fixed 17-significant-digit rendering ("%.17g"); parses back bit-exact.
std::string format_real(double v);

/// Parses comma-separated `x:p` pairs, e.g. "0:0.5,0.25:0.3,1:0.2".
/// Throws std::invalid_argument on malformed pairs or an invalid distribution.
DiscreteDistribution parse_distribution(std::string_view text);

/// Inverse of parse_distribution, using format_real for both fields.
std::string format_distribution(const DiscreteDistribution& d);

}  // namespace extremal
