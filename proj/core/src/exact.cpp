#include "pertcoul/exact.hpp"

#include "pertcoul/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace pertcoul {

namespace {

void require_positive(double a, double c) {
    if (!(a > 0.0) || !(c > 0.0)) {
        throw DomainError(
            "constraint requires attractive Coulomb and confining quadratic terms");
    }
}

// sqrt(2 m c) / (2 hbar): Gaussian decay rate fixed by c alone.
double gaussian_rate(double c, const PhysicalParams& phys) {
    return std::sqrt(2.0 * phys.mass * c) / (2.0 * phys.hbar);
}

LaurentForm barrier(const DimensionSpec& dim, const PhysicalParams& phys) {
    const double lam = dim.Lambda();
    return LaurentForm{{-2, lam * (lam + 1.0) * phys.kinetic()}};
}

double rel_diff(double x, double y) {
    const double scale = std::max(std::abs(x), std::abs(y));
    return scale == 0.0 ? 0.0 : std::abs(x - y) / scale;
}

} // namespace

double constraint_b(double a, double c, const DimensionSpec& dim, const PhysicalParams& phys) {
    require_positive(a, c);
    return 2.0 * a * std::sqrt(2.0 * phys.mass * c) / ((dim.M() - 1) * phys.hbar);
}

double constraint_a(double b, double c, const DimensionSpec& dim, const PhysicalParams& phys,
                    int n) {
    require_positive(b, c);
    if (n < 0) throw DomainError("level index n must be >= 0");
    return (dim.Lambda() + n + 1.0) * phys.hbar * b / std::sqrt(2.0 * phys.mass * c);
}

double constraint_c(double a, double b, const DimensionSpec& dim, const PhysicalParams& phys) {
    require_positive(a, b);
    const double root = b * (dim.M() - 1) * phys.hbar / (2.0 * a * std::sqrt(2.0 * phys.mass));
    return root * root;
}

double constraint_violation(const PotentialParams& params, const DimensionSpec& dim,
                            const PhysicalParams& phys) {
    if (params.c > 0.0) {
        const double target =
            2.0 * params.a * std::sqrt(2.0 * phys.mass * params.c) / ((dim.M() - 1) * phys.hbar);
        return std::abs(params.b - target);
    }
    if (!(params.a > 0.0)) return std::numeric_limits<double>::infinity();
    return std::abs(params.b);
}

void require_constraint(const PotentialParams& params, const DimensionSpec& dim,
                        const PhysicalParams& phys, double tol) {
    const double violation = constraint_violation(params, dim, phys);
    const double target = params.c > 0.0 ? 2.0 * params.a * std::sqrt(2.0 * phys.mass * params.c) /
                                               ((dim.M() - 1) * phys.hbar)
                                         : 0.0;
    const double scale = std::max(std::abs(params.b), std::abs(target));
    if (violation == 0.0 || violation <= tol * scale) return;
    std::ostringstream msg;
    msg.precision(17);
    msg << "potential parameters violate the closed-form constraint (violation " << violation
        << ")";
    throw ConstraintViolation(msg.str(), violation);
}

CoulombGround coulomb_ground(double a, const DimensionSpec& dim, const PhysicalParams& phys) {
    if (!(a > 0.0)) throw DomainError("no bound Coulomb state for a <= 0");
    const double s = dim.Lambda() + 1.0;
    const double g = phys.ladder_scale();
    CoulombGround out;
    out.w = Superpotential(LaurentForm{{0, std::sqrt(phys.mass / 2.0) * a / (s * phys.hbar)},
                                       {-1, -s * g}});
    out.chi.power = s;
    out.chi.lin = phys.mass * a / (s * phys.hbar * phys.hbar);
    out.epsilon = -phys.mass * a * a / (2.0 * phys.hbar * phys.hbar * s * s);
    return out;
}

PerturbationGround perturbation_ground_coulomb(const PotentialParams& params,
                                               const DimensionSpec& dim,
                                               const PhysicalParams& phys, double tol) {
    PerturbationGround out;
    if (params.b == 0.0 && params.c == 0.0) return out;
    require_positive(params.a, params.c);
    require_constraint(params, dim, phys, tol);
    const int m = dim.M();
    out.dw = Superpotential(LaurentForm{{1, std::sqrt(params.c)}});
    out.phi.quad = gaussian_rate(params.c, phys);
    out.delta_epsilon =
        m * (m - 1.0) * params.b * phys.hbar * phys.hbar / (4.0 * phys.mass * params.a);
    return out;
}

const char* to_string(View v) { return v == View::coulomb ? "coulomb" : "oscillator"; }

GroundSolution ground_state(const PotentialParams& params, const DimensionSpec& dim,
                            const PhysicalParams& phys, double tol) {
    params.validate();
    phys.validate();
    if (params.a == 0.0 && params.b == 0.0) return oscillator_view_ground(params, dim, phys, tol);
    if (params.c > 0.0 || params.b > 0.0) require_constraint(params, dim, phys, tol);

    const CoulombGround cg = coulomb_ground(params.a, dim, phys);
    const PerturbationGround pg = perturbation_ground_coulomb(params, dim, phys, tol);

    GroundSolution out;
    out.view = View::coulomb;
    out.w = cg.w;
    out.dw = pg.dw;
    out.v_es = barrier(dim, phys) + LaurentForm{{-1, -params.a}};
    out.dv = LaurentForm{{1, params.b}, {2, params.c}};
    out.chi = cg.chi;
    out.phi = pg.phi;
    out.psi = cg.chi * pg.phi;
    out.energy = EnergyBreakdown::of(cg.epsilon, pg.delta_epsilon);
    return out;
}

GroundSolution oscillator_view_ground(const PotentialParams& params, const DimensionSpec& dim,
                                      const PhysicalParams& phys, double tol) {
    params.validate();
    phys.validate();
    if (!(params.c > 0.0)) throw DomainError("oscillator view needs c > 0");
    require_constraint(params, dim, phys, tol);

    const double s = dim.Lambda() + 1.0;
    const double g = phys.ladder_scale();
    const double root_c = std::sqrt(params.c);

    GroundSolution out;
    out.view = View::oscillator;
    out.w = Superpotential(LaurentForm{{1, root_c}, {-1, -s * g}});
    out.dw = Superpotential(LaurentForm{{0, 0.5 * params.b / root_c}});
    out.v_es = barrier(dim, phys) + LaurentForm{{2, params.c}};
    out.dv = LaurentForm{{-1, -params.a}, {1, params.b}};
    out.chi.power = s;
    out.chi.quad = gaussian_rate(params.c, phys);
    out.phi.lin = std::sqrt(phys.mass / 2.0) * params.b / (phys.hbar * root_c);
    out.psi = out.chi * out.phi;
    out.energy = EnergyBreakdown::of(g * root_c * (2.0 * dim.Lambda() + 3.0),
                                     -params.b * params.b / (4.0 * params.c));
    return out;
}

DualViewCheck dual_view_check(const PotentialParams& params, const DimensionSpec& dim,
                              const PhysicalParams& phys, double tol) {
    if (!(params.a > 0.0) || !(params.c > 0.0)) {
        throw DomainError("dual view needs both a > 0 and c > 0");
    }
    const GroundSolution coul = ground_state(params, dim, phys, tol);
    const GroundSolution osc = oscillator_view_ground(params, dim, phys, tol);
    DualViewCheck out;
    out.energy_diff = std::abs(coul.energy.total - osc.energy.total);
    out.param_rel_diff = std::max({rel_diff(coul.psi.power, osc.psi.power),
                                   rel_diff(coul.psi.lin, osc.psi.lin),
                                   rel_diff(coul.psi.quad, osc.psi.quad)});
    return out;
}

std::vector<SpectrumLevel> spectrum(double b, double c, const DimensionSpec& dim,
                                    const PhysicalParams& phys, int n_max) {
    if (!(c > 0.0)) throw DomainError("spectrum needs c > 0");
    if (b < 0.0) throw DomainError("spectrum needs b >= 0");
    if (n_max < 0) throw DomainError("n_max must be >= 0");
    const double quantum = phys.ladder_scale() * std::sqrt(c);
    const double shift = -b * b / (4.0 * c);
    std::vector<SpectrumLevel> levels;
    levels.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        SpectrumLevel lvl;
        lvl.n = n;
        lvl.a_n = b > 0.0 ? constraint_a(b, c, dim, phys, n) : 0.0;
        lvl.energy = shift + quantum * (2.0 * (n + dim.Lambda()) + 3.0);
        levels.push_back(std::move(lvl));
    }
    return levels;
}

Superpotential hierarchy_superpotential(double b, double c, const DimensionSpec& dim,
                                        const PhysicalParams& phys, int k) {
    if (!(c > 0.0) || b < 0.0) throw DomainError("hierarchy needs b >= 0 and c > 0");
    const double root_c = std::sqrt(c);
    return Superpotential(LaurentForm{{-1, -(dim.Lambda() + k + 1.0) * phys.ladder_scale()},
                                      {0, 0.5 * b / root_c},
                                      {1, root_c}});
}

PotentialParams hierarchy_params(double b, double c, const DimensionSpec& dim,
                                 const PhysicalParams& phys, int k) {
    return {b > 0.0 ? constraint_a(b, c, dim, phys, k) : 0.0, b, c};
}

ClosedFormState hierarchy_ground(double b, double c, const DimensionSpec& dim,
                                 const PhysicalParams& phys, int k) {
    if (!(c > 0.0) || b < 0.0) throw DomainError("hierarchy needs b >= 0 and c > 0");
    ClosedFormState st;
    st.power = dim.Lambda() + k + 1.0;
    st.lin = std::sqrt(phys.mass / 2.0) * b / (phys.hbar * std::sqrt(c));
    st.quad = gaussian_rate(c, phys);
    return st;
}

ClosedFormState hierarchy_states(double b, double c, const DimensionSpec& dim,
                                 const PhysicalParams& phys, int n) {
    if (n < 0) throw DomainError("hierarchy level must be >= 0");
    ClosedFormState st = hierarchy_ground(b, c, dim, phys, n);
    for (int k = n - 1; k >= 0; --k) {
        st = ladder_apply(hierarchy_superpotential(b, c, dim, phys, k), st, phys);
    }
    return st;
}

} // namespace pertcoul
