#pragma once

#include "pertcoul/closed_form.hpp"
#include "pertcoul/model.hpp"

#include <vector>

namespace pertcoul {

// Polynomial-ansatz oracle.
//
// Substituting u = P(r) r^(Lambda+1) exp(-lin r - quad r^2), P of degree n, into
//   -T u'' + (-A/r + b r + c r^2 + T Lambda(Lambda+1)/r^2) u = E u,   T = hbar^2/2m
// fixes quad = sqrt(2mc)/(2 hbar) and lin = b/(4 T quad) from the r^2 and r terms,
// fixes E from the r^n term, and leaves n + 1 linear conditions (powers r^j,
// j = -1..n-1) on p_0..p_n:
//
//   T[(j+2)(j+1) + 2(Lambda+1)(j+2)] p_{j+2} + (A - shift_j) p_{j+1} + 4 T quad (n-j) p_j = 0
//   shift_j = 2 T lin (Lambda+1) + 2 T lin (j+1)
//
// A nontrivial P exists only for the n + 1 values of A that make this system
// singular. This is independent of the superpotential machinery and is used
// to adjudicate the closed forms.

/// Conditions for powers r^j, j = -1..n-1, as
/// upper * p_{j+2} + (A - shift) * p_{j+1} + lower * p_j = 0.
struct OracleRow {
    int j = 0;
    double upper = 0.0;
    double shift = 0.0;
    double lower = 0.0;
};

struct ReducedSystem {
    int n = 0;
    double kinetic = 0.0;  ///< T = hbar^2/2m
    double lin = 0.0;
    double quad = 0.0;
    double power = 0.0;    ///< Lambda + 1
    double a0 = 0.0;       ///< the n = 0 root, 2 T lin (Lambda+1)
    double energy = 0.0;   ///< level energy, same for every root
    std::vector<OracleRow> rows;

    /// p_0..p_n from back-substitution with p_n = 1 at the given A.
    std::vector<double> coefficients(double A) const;
    /// Left side of the j = -1 row after back-substitution; zero at roots.
    double determinant_residual(double A) const;
};

struct OracleSolution {
    int n = 0;
    double a_root = 0.0;
    std::vector<double> poly;  ///< p_0..p_n, monic
    double energy = 0.0;
    int node_count = 0;
    ClosedFormState state;
};

/// Requires c > 0, b >= 0, 0 <= n.
ReducedSystem oracle_reduce(double b, double c, const DimensionSpec& dim,
                            const PhysicalParams& phys, int n);

/// Monic polynomial in A (ascending coefficients, degree n + 1) whose roots
/// are the Coulomb strengths admitting an exact level-n state.
std::vector<double> qes_constraint_polynomial(double b, double c, const DimensionSpec& dim,
                                              const PhysicalParams& phys, int n);

/// All real roots, ascending, each refined by bisection to machine precision,
/// with its eigenstate. Roots with A <= 0 (repulsive Coulomb) are included.
std::vector<OracleSolution> qes_solve(double b, double c, const DimensionSpec& dim,
                                      const PhysicalParams& phys, int n);

inline constexpr int oracle_max_level = 8;

} // namespace pertcoul
