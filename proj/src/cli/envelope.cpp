#include <cmath>
#include <ostream>

#include "extremal/cli.h"
#include "extremal/text.h"

namespace extremal::cli {

namespace {

void dump(const nlohmann::json& j, std::string& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
    switch (j.type()) {
        case nlohmann::json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad;
                out += nlohmann::json(it.key()).dump();
                out += ": ";
                dump(it.value(), out, indent + 2);
            }
            out += '\n';
            out += std::string(static_cast<std::size_t>(indent), ' ');
            out += '}';
            return;
        }
        case nlohmann::json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            bool first = true;
            for (const auto& v : j) {
                if (!first) out += ",\n";
                first = false;
                out += pad;
                dump(v, out, indent + 2);
            }
            out += '\n';
            out += std::string(static_cast<std::size_t>(indent), ' ');
            out += ']';
            return;
        }
        case nlohmann::json::value_t::number_float: {
            const double v = j.get<double>();
            out += std::isfinite(v) ? format_real(v) : "null";
            return;
        }
        default:
            out += j.dump();
    }
}

}  // namespace

std::string dump_envelope(const nlohmann::json& j) {
    std::string out;
    dump(j, out, 0);
    out += '\n';
    return out;
}

}  // namespace extremal::cli
