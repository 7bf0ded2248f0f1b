#include "options.hpp"

#include "pertcoul/exact.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>

namespace pertcoul::cli {

namespace {

double to_double(const std::string& s, const char* name) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
        throw UsageError(std::string("--") + name + ": not a number: '" + s + "'");
    }
    return v;
}

void append_range(const std::string& tok, const char* name, std::vector<double>& out) {
    const auto first = tok.find(':');
    const auto second = tok.find(':', first + 1);
    if (second == std::string::npos || tok.find(':', second + 1) != std::string::npos) {
        throw UsageError(std::string("--") + name + ": range must be start:stop:count, got '" +
                         tok + "'");
    }
    const double start = to_double(tok.substr(0, first), name);
    const double stop = to_double(tok.substr(first + 1, second - first - 1), name);
    const double count_d = to_double(tok.substr(second + 1), name);
    if (count_d < 0.0 || count_d != std::floor(count_d) || count_d > 1e6) {
        throw UsageError(std::string("--") + name + ": range count must be a non-negative integer");
    }
    const auto count = static_cast<long>(count_d);
    for (long i = 0; i < count; ++i) {
        out.push_back(count == 1 ? start
                                 : start + (stop - start) * static_cast<double>(i) /
                                               static_cast<double>(count - 1));
    }
}

double single(const std::vector<std::string>& tokens, const char* name, double fallback) {
    const auto vals = parse_values(tokens, name);
    if (vals.empty()) return fallback;
    if (vals.size() > 1) {
        throw UsageError(std::string("--") + name + ": lists are only accepted by sweep");
    }
    return vals.front();
}

int single_int(const std::vector<std::string>& tokens, const char* name, int fallback) {
    const auto vals = parse_ints(tokens, name);
    if (vals.empty()) return fallback;
    if (vals.size() > 1) {
        throw UsageError(std::string("--") + name + ": lists are only accepted by sweep");
    }
    return vals.front();
}

} // namespace

std::vector<double> parse_values(const std::vector<std::string>& tokens, const char* name) {
    std::vector<double> out;
    for (const auto& tok : tokens) {
        if (tok.empty()) continue;
        if (tok.find(':') != std::string::npos) {
            append_range(tok, name, out);
        } else {
            out.push_back(to_double(tok, name));
        }
    }
    return out;
}

std::vector<int> parse_ints(const std::vector<std::string>& tokens, const char* name) {
    std::vector<int> out;
    for (double v : parse_values(tokens, name)) {
        if (v != std::floor(v) || std::abs(v) > 1e6) {
            throw UsageError(std::string("--") + name + ": expected an integer");
        }
        out.push_back(static_cast<int>(v));
    }
    return out;
}

PhysicalParams physical(const Options& opt) {
    const PhysicalParams phys{opt.mass, opt.hbar};
    phys.validate();
    return phys;
}

PotentialParams derive_params(double a, double b, double c, const std::string& derive,
                              const DimensionSpec& dim, const PhysicalParams& phys) {
    PotentialParams p{a, b, c};
    if (derive == "b") {
        p.b = constraint_b(a, c, dim, phys);
    } else if (derive == "a") {
        p.a = constraint_a(b, c, dim, phys);
    } else if (derive == "c") {
        p.c = constraint_c(a, b, dim, phys);
    }
    return p;
}

Problem single_problem(const Options& opt) {
    if (!opt.derive.empty()) {
        const auto& given = opt.derive == "a" ? opt.a : opt.derive == "b" ? opt.b : opt.c;
        if (!parse_values(given, opt.derive.c_str()).empty()) {
            throw UsageError("--derive " + opt.derive + " conflicts with an explicit --" +
                             opt.derive);
        }
    }
    const auto dim = dimension_reduce(single_int(opt.N, "N", 3), single_int(opt.l, "l", 0));
    const auto phys = physical(opt);
    auto params = derive_params(single(opt.a, "a", 0.0), single(opt.b, "b", 0.0),
                                single(opt.c, "c", 0.0), opt.derive, dim, phys);
    params.validate();
    return {params, dim, phys};
}

} // namespace pertcoul::cli
