#include "pertcoul/numerics.hpp"

#include "pertcoul/error.hpp"
#include "pertcoul/tolerances.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace pertcoul {

RadialGrid::RadialGrid(double h, std::size_t count) : h_(h), count_(count) {
    if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("grid step must be positive");
    if (count < min_count) {
        throw DomainError("grid needs at least " + std::to_string(min_count) + " nodes, got " +
                          std::to_string(count));
    }
}

namespace {

// Largest r with V(r) <= E, searching outward from `start`.
double turning_radius(const LaurentForm& v, double energy, double start) {
    double r = start;
    const double cap = start * 1e6;
    while (v(r) <= energy && r < cap) r *= 2.0;
    if (r >= cap) return cap;
    double lo = 0.5 * r, hi = r;
    if (v(lo) > energy) return lo;  // already classically forbidden at the start
    for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        (v(mid) <= energy ? lo : hi) = mid;
    }
    return hi;
}

} // namespace

RadialGrid build_grid(const PotentialParams& params, const DimensionSpec& dim,
                      const PhysicalParams& phys, const GridOverrides& overrides) {
    params.validate();
    phys.validate();
    const double lam = dim.Lambda();
    const double hb2m = phys.hbar * phys.hbar / phys.mass;

    double coulomb_len = 0.0, osc_len = 0.0, lin_len = 0.0;
    if (params.a > 0.0) coulomb_len = (lam + 1.0) * hb2m / params.a;
    if (params.c > 0.0) osc_len = std::sqrt(phys.hbar / std::sqrt(2.0 * phys.mass * params.c));
    if (params.b > 0.0) lin_len = std::cbrt(phys.kinetic() / params.b);
    const double scale = std::max({coulomb_len, osc_len, lin_len});

    double r_max = 0.0;
    if (overrides.r_max) {
        r_max = *overrides.r_max;
    } else {
        const LaurentForm v = effective_potential(params, dim, phys);
        double energy = 0.0;
        if (overrides.energy_hint) {
            energy = *overrides.energy_hint;
        } else if (params.c > 0.0) {
            energy = -params.b * params.b / (4.0 * params.c) +
                     phys.ladder_scale() * std::sqrt(params.c) * (2.0 * lam + 3.0);
        } else if (params.b == 0.0) {
            energy = -params.a * params.a * phys.mass / (2.0 * phys.hbar * phys.hbar *
                                                         (lam + 1.0) * (lam + 1.0));
        } else {
            energy = v(2.0 * scale);
        }
        r_max = turning_radius(v, energy, scale) + 10.0 * scale;
        r_max = std::max({r_max, 10.0 * coulomb_len, 10.0 * osc_len});
    }
    if (!(r_max > 0.0) || !std::isfinite(r_max)) throw DomainError("grid r_max must be positive");

    double h = r_max / RadialGrid::default_intervals;
    // Strong Coulomb or stiff oscillator terms shrink the state well below the
    // box size; keep a fixed number of nodes per shortest physical length.
    double shortest = std::numeric_limits<double>::infinity();
    if (coulomb_len > 0.0) shortest = std::min(shortest, coulomb_len);
    if (osc_len > 0.0) shortest = std::min(shortest, osc_len);
    if (std::isfinite(shortest)) h = std::min(h, shortest / RadialGrid::nodes_per_length);
    if (overrides.h) h = *overrides.h;
    const auto count = static_cast<std::size_t>(std::llround(r_max / h));
    return RadialGrid(h, count);
}

GridFunction evaluate_state(const ClosedFormState& state, const RadialGrid& grid) {
    if (!state.normalizable()) {
        throw DomainError("state is not square integrable (needs power > -1/2 and decay)");
    }
    GridFunction f{grid, std::vector<double>(grid.count())};
    for (std::size_t i = 0; i < grid.count(); ++i) f.values[i] = state.value(grid.r(i));
    return f;
}

double norm_squared(const GridFunction& f) {
    double sum = 0.0;
    for (double v : f.values) sum += v * v;
    return sum * f.grid.h();
}

Normalized normalize(const GridFunction& f) {
    const double n2 = norm_squared(f);
    if (!(n2 > 0.0) || !std::isfinite(n2)) throw DomainError("cannot normalize: zero or non-finite norm");
    const double scale = 1.0 / std::sqrt(n2);
    Normalized out{f, scale};
    for (double& v : out.f.values) v *= scale;
    return out;
}

GridFunction hamiltonian_apply(const LaurentForm& v_eff, const GridFunction& f,
                               const PhysicalParams& phys) {
    const auto& g = f.grid;
    const std::size_t n = g.count();
    const double t = phys.kinetic() / (g.h() * g.h());
    GridFunction out{g, std::vector<double>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        const double left = i > 0 ? f.values[i - 1] : 0.0;
        const double right = i + 1 < n ? f.values[i + 1] : 0.0;
        out.values[i] = -t * (left - 2.0 * f.values[i] + right) + v_eff(g.r(i)) * f.values[i];
    }
    return out;
}

Tridiagonal discretize(const LaurentForm& v_eff, const RadialGrid& grid, const PhysicalParams& phys) {
    const double t = phys.kinetic() / (grid.h() * grid.h());
    Tridiagonal m;
    m.off = -t;
    m.diag.resize(grid.count());
    for (std::size_t i = 0; i < grid.count(); ++i) m.diag[i] = 2.0 * t + v_eff(grid.r(i));
    return m;
}

std::size_t Tridiagonal::count_below(double x) const {
    // Signs of the LDL^T pivots of (T - x I).
    const double off2 = off * off;
    const double tiny = std::numeric_limits<double>::min() * 1e10;
    std::size_t negatives = 0;
    double d = 1.0;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        d = (diag[i] - x) - (i > 0 ? off2 / d : 0.0);
        if (d == 0.0) d = -tiny;
        if (d < 0.0) ++negatives;
    }
    return negatives;
}

std::pair<double, double> Tridiagonal::bounds() const {
    const auto [lo, hi] = std::minmax_element(diag.begin(), diag.end());
    const double radius = 2.0 * std::abs(off);
    return {*lo - radius, *hi + radius};
}

namespace {

double bisect_eigenvalue(const Tridiagonal& m, std::size_t index, double lo, double hi) {
    const double tol_scale = Tolerances{}.eigen_abs;
    while (true) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= tol_scale * std::max(1.0, std::abs(mid)) || mid <= lo || mid >= hi) {
            return mid;
        }
        (m.count_below(mid) > index ? hi : lo) = mid;
    }
}

std::vector<double> lowest_values(const Tridiagonal& m, std::size_t k) {
    auto [lo, hi] = m.bounds();
    std::vector<double> out(k);
    for (std::size_t j = 0; j < k; ++j) {
        out[j] = bisect_eigenvalue(m, j, j > 0 ? out[j - 1] - 1e-9 * std::max(1.0, std::abs(out[j - 1])) : lo, hi);
    }
    return out;
}

// Inverse iteration on (T - sigma I) with the Thomas algorithm.
std::vector<double> inverse_iteration(const Tridiagonal& m, double sigma) {
    const std::size_t n = m.diag.size();
    const double shift = sigma + 1e-10 * std::max(1.0, std::abs(sigma));
    const double tiny = std::numeric_limits<double>::min() * 1e10;

    std::vector<double> pivot(n), x(n, 1.0), y(n);
    for (std::size_t i = 0; i < n; ++i) {
        pivot[i] = (m.diag[i] - shift) - (i > 0 ? m.off * m.off / pivot[i - 1] : 0.0);
        if (pivot[i] == 0.0) pivot[i] = tiny;
    }
    for (int sweep = 0; sweep < 4; ++sweep) {
        // forward: L z = x, then back: D L^T y = z
        for (std::size_t i = 0; i < n; ++i) {
            y[i] = x[i] - (i > 0 ? m.off / pivot[i - 1] * y[i - 1] : 0.0);
        }
        for (std::size_t i = n; i-- > 0;) {
            y[i] = (y[i] - (i + 1 < n ? m.off * y[i + 1] : 0.0)) / pivot[i];
        }
        double norm = 0.0;
        for (double v : y) norm = std::max(norm, std::abs(v));
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
    }
    return x;
}

GridFunction oriented(GridFunction f) {
    double peak = 0.0;
    for (double v : f.values) peak = std::max(peak, std::abs(v));
    for (double v : f.values) {
        if (std::abs(v) > 1e-3 * peak) {
            if (v < 0.0) {
                for (double& w : f.values) w = -w;
            }
            break;
        }
    }
    return f;
}

} // namespace

EigenResult eigen_lowest(const LaurentForm& v_eff, const RadialGrid& grid,
                         const PhysicalParams& phys, const EigenOptions& options) {
    if (options.k < 1 || options.k > grid.count() / 2) {
        throw DomainError("eigenvalue count k out of range");
    }
    const Tridiagonal m = discretize(v_eff, grid, phys);
    EigenResult out;
    out.values = lowest_values(m, options.k);
    if (options.vectors) {
        for (double e : out.values) {
            GridFunction f{grid, inverse_iteration(m, e)};
            out.vectors.push_back(oriented(normalize(f).f));
        }
    }
    if (options.richardson) {
        const std::vector<double> fine = lowest_values(discretize(v_eff, grid.refined(), phys), options.k);
        for (std::size_t j = 0; j < options.k; ++j) {
            out.values[j] = (4.0 * fine[j] - out.values[j]) / 3.0;
        }
    }
    return out;
}

double h_residual(const GridFunction& f, double energy, const LaurentForm& v_eff,
                  const PhysicalParams& phys) {
    const GridFunction hf = hamiltonian_apply(v_eff, f, phys);
    const std::size_t n = f.values.size();
    constexpr std::size_t skip = 3;
    double num = 0.0, den = 0.0;
    for (std::size_t i = skip; i + skip < n; ++i) {
        const double r = hf.values[i] - energy * f.values[i];
        num += r * r;
        den += f.values[i] * f.values[i];
    }
    if (!(den > 0.0)) throw DomainError("h_residual of a zero function");
    return std::sqrt(num / den);
}

double h_residual(const ClosedFormState& state, const RadialGrid& grid, double energy,
                  const LaurentForm& v_eff, const PhysicalParams& phys) {
    return h_residual(evaluate_state(state, grid), energy, v_eff, phys);
}

double overlap(const GridFunction& f, const GridFunction& g) {
    if (!(f.grid == g.grid)) throw DomainError("overlap of functions on different grids");
    double fg = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) fg += f.values[i] * g.values[i];
    return fg * f.grid.h() / std::sqrt(norm_squared(f) * norm_squared(g));
}

} // namespace pertcoul
