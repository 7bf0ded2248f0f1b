#pragma once

#include "pertcoul/closed_form.hpp"
#include "pertcoul/laurent.hpp"
#include "pertcoul/model.hpp"
#include "pertcoul/susy.hpp"
#include "pertcoul/tolerances.hpp"

#include <optional>
#include <vector>

namespace pertcoul {

/// b = 2 a sqrt(2 m c) / ((M - 1) hbar). Needs a > 0 and c > 0.
double constraint_b(double a, double c, const DimensionSpec& dim, const PhysicalParams& phys);

/// Level-advanced inversion a_n = (Lambda + n + 1) hbar b / sqrt(2 m c).
///
/// For n = 0 this is exactly the inverse of constraint_b. For n >= 1 it is the
/// linear rule obtained by shifting Lambda -> Lambda + n at fixed (b, c); it is
/// *not* claimed to be the exact level-n constraint (see qes_oracle).
double constraint_a(double b, double c, const DimensionSpec& dim, const PhysicalParams& phys,
                    int n = 0);

/// c solving constraint_b(a, c) = b.
double constraint_c(double a, double b, const DimensionSpec& dim, const PhysicalParams& phys);

/// |b - b*| where b* is what the closed form demands: constraint_b(a, c) when
/// c > 0, and 0 when c = 0. Infinity when no b can help (a <= 0 with c = 0).
double constraint_violation(const PotentialParams& params, const DimensionSpec& dim,
                            const PhysicalParams& phys);

/// Throws ConstraintViolation unless the violation is within
/// tol * max(|b*|, |b|) (or exactly zero when both vanish).
void require_constraint(const PotentialParams& params, const DimensionSpec& dim,
                        const PhysicalParams& phys, double tol);

struct EnergyBreakdown {
    double epsilon = 0.0;
    double delta_epsilon = 0.0;
    double total = 0.0;

    static EnergyBreakdown of(double eps, double d_eps) { return {eps, d_eps, eps + d_eps}; }
};

struct CoulombGround {
    Superpotential w;
    ClosedFormState chi;
    double epsilon = 0.0;
};

/// Hydrogen-like ground state of -a/r plus the barrier. a > 0.
CoulombGround coulomb_ground(double a, const DimensionSpec& dim, const PhysicalParams& phys);

struct PerturbationGround {
    Superpotential dw;
    ClosedFormState phi;
    double delta_epsilon = 0.0;
};

/// The moderating function and energy shift caused by b r + c r^2 on top of
/// the Coulomb ground state. Requires the constraint within `tol`.
PerturbationGround perturbation_ground_coulomb(const PotentialParams& params,
                                               const DimensionSpec& dim,
                                               const PhysicalParams& phys,
                                               double tol = Tolerances{}.constraint_rel);

enum class View { coulomb, oscillator };

const char* to_string(View v);

struct GroundSolution {
    View view = View::coulomb;
    Superpotential w;
    Superpotential dw;
    LaurentForm v_es;  ///< exactly solvable part (including the barrier)
    LaurentForm dv;    ///< perturbing part
    ClosedFormState chi;
    ClosedFormState phi;
    ClosedFormState psi;
    EnergyBreakdown energy;

    Superpotential full_superpotential() const { return w + dw; }
    LaurentForm potential() const { return v_es + dv; }
};

/// Coulomb-view ground state. b = c = 0 routes to the bare Coulomb solution;
/// a = b = 0 (pure oscillator) routes to oscillator_view_ground.
GroundSolution ground_state(const PotentialParams& params, const DimensionSpec& dim,
                            const PhysicalParams& phys,
                            double tol = Tolerances{}.constraint_rel);

/// Same potential, read as a perturbed oscillator. Requires c > 0 and the
/// same constraint (which reappears from matching the 1/r terms).
GroundSolution oscillator_view_ground(const PotentialParams& params, const DimensionSpec& dim,
                                      const PhysicalParams& phys,
                                      double tol = Tolerances{}.constraint_rel);

struct DualViewCheck {
    double energy_diff = 0.0;
    double param_rel_diff = 0.0;  ///< max relative difference over (q, lin, quad)
};

DualViewCheck dual_view_check(const PotentialParams& params, const DimensionSpec& dim,
                              const PhysicalParams& phys,
                              double tol = Tolerances{}.constraint_rel);

struct SpectrumLevel {
    int n = 0;
    double a_n = 0.0;
    double energy = 0.0;
    std::optional<ClosedFormState> state;
};

/// E_n = -b^2/(4c) + (hbar sqrt(c)/sqrt(2m)) (2(n + Lambda) + 3) for n = 0..n_max,
/// with a_n from constraint_a (0 when b = 0).
std::vector<SpectrumLevel> spectrum(double b, double c, const DimensionSpec& dim,
                                    const PhysicalParams& phys, int n_max);

/// Full superpotential of hierarchy member k: Lambda -> Lambda + k with b, c
/// fixed and a advanced to a_k.
Superpotential hierarchy_superpotential(double b, double c, const DimensionSpec& dim,
                                        const PhysicalParams& phys, int k);

/// Potential parameters of hierarchy member k, i.e. (a_k, b, c).
PotentialParams hierarchy_params(double b, double c, const DimensionSpec& dim,
                                 const PhysicalParams& phys, int k);

/// Ground state of hierarchy member k (power Lambda + k + 1).
ClosedFormState hierarchy_ground(double b, double c, const DimensionSpec& dim,
                                 const PhysicalParams& phys, int k);

/// Psi_n built by descending the ladder: seed at member n, then apply
/// A+(alpha_{n-1}), ..., A+(alpha_0). n = 0 returns the member-0 ground state.
ClosedFormState hierarchy_states(double b, double c, const DimensionSpec& dim,
                                 const PhysicalParams& phys, int n);

} // namespace pertcoul
