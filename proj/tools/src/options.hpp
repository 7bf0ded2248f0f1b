#pragma once

#include "pertcoul/model.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pertcoul::cli {

/// Bad flags or malformed values; maps to exit code 1.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Everything the root parser collects. Parameter flags keep their raw
/// tokens because `sweep` reads them as lists.
struct Options {
    std::vector<std::string> a, b, c, N, l, n;
    double hbar = 1.0;
    double mass = 1.0;
    std::string derive;  ///< "", "a", "b" or "c"
    int nmax = 2;
    int k = 3;
    std::optional<double> rmax;
    std::optional<double> h;
    bool richardson = false;
    bool check = false;
    std::string out;     ///< "" means the command's default
};

/// Comma lists and start:stop:count ranges (count points, ends included).
/// Empty tokens contribute nothing.
std::vector<double> parse_values(const std::vector<std::string>& tokens, const char* name);
std::vector<int> parse_ints(const std::vector<std::string>& tokens, const char* name);

/// One concrete problem: a single point of the option space.
struct Problem {
    PotentialParams params;
    DimensionSpec dim;
    PhysicalParams phys;
};

/// Fills the derived parameter, if any, from the constraint.
PotentialParams derive_params(double a, double b, double c, const std::string& derive,
                              const DimensionSpec& dim, const PhysicalParams& phys);

/// Single-valued view used by every command except sweep.
Problem single_problem(const Options& opt);

PhysicalParams physical(const Options& opt);

} // namespace pertcoul::cli
