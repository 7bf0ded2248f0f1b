#pragma once

#include <span>
#include <vector>

namespace pertcoul::poly {

// Dense polynomials as ascending coefficient vectors: p[k] multiplies x^k.

double evaluate(std::span<const double> p, double x);
std::vector<double> derivative(std::span<const double> p);
std::vector<double> multiply(std::span<const double> p, std::span<const double> q);
std::vector<double> add(std::span<const double> p, std::span<const double> q);

/// Drops exactly-zero leading coefficients (keeps at least one entry).
std::vector<double> trimmed(std::vector<double> p);

/// Index of the highest nonzero coefficient, -1 for the zero polynomial.
int degree(std::span<const double> p);

/// Fujiwara bound: every root satisfies |x| <= bound.
double root_bound(std::span<const double> p);

/// Number of sign changes of p along a geometric grid in (0, root_bound],
/// plus a turning-point check on P' for close root pairs within one cell.
/// Counts simple positive roots; that is the node count of a radial state.
int count_positive_roots(std::span<const double> p);

} // namespace pertcoul::poly
