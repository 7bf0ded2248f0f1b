#include "pertcoul/qes_oracle.hpp"

#include "pertcoul/error.hpp"
#include "pertcoul/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pertcoul {

ReducedSystem oracle_reduce(double b, double c, const DimensionSpec& dim,
                            const PhysicalParams& phys, int n) {
    phys.validate();
    if (!(c > 0.0) || b < 0.0) throw DomainError("oracle needs c > 0 and b >= 0");
    if (n < 0 || n > oracle_max_level) {
        throw DomainError("oracle level must be in [0, " + std::to_string(oracle_max_level) + "]");
    }
    ReducedSystem sys;
    sys.n = n;
    sys.kinetic = phys.kinetic();
    sys.quad = std::sqrt(2.0 * phys.mass * c) / (2.0 * phys.hbar);
    sys.lin = b / (4.0 * sys.kinetic * sys.quad);
    sys.power = dim.Lambda() + 1.0;
    sys.a0 = 2.0 * sys.kinetic * sys.lin * sys.power;

    const double t = sys.kinetic;
    // r^n row: E = -T lin^2 + 2 T quad (1 + 2(Lambda+1)) + 4 T quad n
    sys.energy = -t * sys.lin * sys.lin + 2.0 * t * sys.quad * (1.0 + 2.0 * sys.power) +
                 4.0 * t * sys.quad * n;

    sys.rows.reserve(static_cast<std::size_t>(n) + 1);
    for (int j = -1; j <= n - 1; ++j) {
        OracleRow row;
        row.j = j;
        row.upper = t * ((j + 2.0) * (j + 1.0) + 2.0 * sys.power * (j + 2.0));
        row.shift = sys.a0 + 2.0 * t * sys.lin * (j + 1.0);
        row.lower = 4.0 * t * sys.quad * (n - j);
        sys.rows.push_back(row);
    }
    return sys;
}

std::vector<double> ReducedSystem::coefficients(double A) const {
    std::vector<double> p(static_cast<std::size_t>(n) + 2, 0.0);  // p_{n+1} = 0 sentinel
    p[static_cast<std::size_t>(n)] = 1.0;
    for (int j = n - 1; j >= 0; --j) {
        const OracleRow& row = rows[static_cast<std::size_t>(j + 1)];
        const auto k = static_cast<std::size_t>(j);
        p[k] = -(row.upper * p[k + 2] + (A - row.shift) * p[k + 1]) / row.lower;
    }
    p.pop_back();
    return p;
}

double ReducedSystem::determinant_residual(double A) const {
    const std::vector<double> p = coefficients(A);
    const OracleRow& top = rows.front();
    const double p1 = n >= 1 ? p[1] : 0.0;
    return top.upper * p1 + (A - top.shift) * p[0];
}

std::vector<double> qes_constraint_polynomial(double b, double c, const DimensionSpec& dim,
                                              const PhysicalParams& phys, int n) {
    const ReducedSystem sys = oracle_reduce(b, c, dim, phys, n);
    // Same back-substitution as ReducedSystem::coefficients, carried out on
    // polynomials in A instead of numbers.
    std::vector<std::vector<double>> p(static_cast<std::size_t>(n) + 2, std::vector<double>{0.0});
    p[static_cast<std::size_t>(n)] = {1.0};
    const auto linear = [](double shift) { return std::vector<double>{-shift, 1.0}; };
    for (int j = n - 1; j >= 0; --j) {
        const OracleRow& row = sys.rows[static_cast<std::size_t>(j + 1)];
        const auto k = static_cast<std::size_t>(j);
        std::vector<double> acc = poly::multiply(linear(row.shift), p[k + 1]);
        for (std::size_t i = 0; i < p[k + 2].size(); ++i) {
            if (i >= acc.size()) acc.resize(i + 1, 0.0);
            acc[i] += row.upper * p[k + 2][i];
        }
        for (double& v : acc) v = -v / row.lower;
        p[k] = std::move(acc);
    }
    const OracleRow& top = sys.rows.front();
    std::vector<double> det = poly::multiply(linear(top.shift), p[0]);
    if (n >= 1) {
        for (std::size_t i = 0; i < p[1].size(); ++i) det[i] += top.upper * p[1][i];
    }
    det = poly::trimmed(std::move(det));
    const double lead = det.back();
    for (double& v : det) v /= lead;
    return det;
}

std::vector<OracleSolution> qes_solve(double b, double c, const DimensionSpec& dim,
                                      const PhysicalParams& phys, int n) {
    const ReducedSystem sys = oracle_reduce(b, c, dim, phys, n);
    const auto det = qes_constraint_polynomial(b, c, dim, phys, n);
    const auto f = [&](double A) { return sys.determinant_residual(A); };

    // The conditions form a tridiagonal eigenproblem in A whose off-diagonal
    // products are positive, so all n + 1 roots are real and simple and lie
    // within the Fujiwara bound. Refine the scan until every root is bracketed.
    const double bound = std::max(poly::root_bound(det), 1.0);
    const int wanted = n + 1;
    std::vector<std::pair<double, double>> brackets;
    for (int samples = 64 * wanted; samples <= (1 << 24); samples *= 2) {
        brackets.clear();
        const double step = 2.0 * bound / samples;
        double x_prev = -bound;
        double f_prev = f(x_prev);
        for (int i = 1; i <= samples; ++i) {
            const double x = -bound + i * step;
            const double fx = f(x);
            if (fx == 0.0) {
                brackets.emplace_back(x, x);
            } else if (f_prev != 0.0 && std::signbit(fx) != std::signbit(f_prev)) {
                brackets.emplace_back(x_prev, x);
            }
            x_prev = x;
            f_prev = fx;
        }
        if (static_cast<int>(brackets.size()) >= wanted) break;
    }

    std::vector<OracleSolution> out;
    for (auto [lo, hi] : brackets) {
        double f_lo = f(lo);
        while (lo < hi) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            const double fm = f(mid);
            if (fm == 0.0) {
                lo = hi = mid;
                break;
            }
            if (std::signbit(fm) == std::signbit(f_lo)) {
                lo = mid;
                f_lo = fm;
            } else {
                hi = mid;
            }
        }
        OracleSolution sol;
        sol.n = n;
        sol.a_root = 0.5 * (lo + hi);
        sol.poly = sys.coefficients(sol.a_root);
        sol.energy = sys.energy;
        sol.state.poly = sol.poly;
        sol.state.power = sys.power;
        sol.state.lin = sys.lin;
        sol.state.quad = sys.quad;
        sol.node_count = sol.state.node_count();
        out.push_back(std::move(sol));
    }
    return out;
}

} // namespace pertcoul
