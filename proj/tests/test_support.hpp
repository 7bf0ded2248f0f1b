#pragma once

#include "pertcoul/laurent.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace pertcoul::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240611);
    return gen;
}

inline double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng());
}

inline ::testing::AssertionResult forms_near(const LaurentForm& got, const LaurentForm& want,
                                             double tol) {
    for (int p = LaurentForm::min_power; p <= LaurentForm::max_power; ++p) {
        if (!(std::abs(got[p] - want[p]) <= tol)) {
            return ::testing::AssertionFailure()
                   << "power " << p << ": got " << got[p] << ", want " << want[p];
        }
    }
    return ::testing::AssertionSuccess();
}

} // namespace pertcoul::testing
