#include "pertcoul/error.hpp"
#include "pertcoul/exact.hpp"
#include "pertcoul/numerics.hpp"
#include "test_support.hpp"

#include <cmath>

using namespace pertcoul;
using pertcoul::testing::forms_near;
using pertcoul::testing::uniform;
using pertcoul::testing::uniform_int;

namespace {

const PhysicalParams unit;
const double u = 1.0 / std::sqrt(2.0);

} // namespace

TEST(Constraint, Examples) {
    EXPECT_DOUBLE_EQ(constraint_b(1.0, 0.5, dimension_reduce(3, 0), unit), 1.0);
    EXPECT_DOUBLE_EQ(constraint_b(1.0, 0.5, dimension_reduce(5, 0), unit), 0.5);
    EXPECT_DOUBLE_EQ(constraint_a(1.0, 0.5, dimension_reduce(3, 0), unit), 1.0);
    EXPECT_DOUBLE_EQ(constraint_a(1.0, 0.5, dimension_reduce(3, 0), unit, 2), 3.0);
    EXPECT_DOUBLE_EQ(constraint_c(1.0, 1.0, dimension_reduce(3, 0), unit), 0.5);
    EXPECT_THROW(constraint_b(-1.0, 0.5, dimension_reduce(3, 0), unit), DomainError);
    EXPECT_THROW(constraint_b(1.0, 0.0, dimension_reduce(3, 0), unit), DomainError);
}

TEST(Constraint, RoundTrips) {
    for (int trial = 0; trial < 50; ++trial) {
        const auto dim = dimension_reduce(uniform_int(2, 9), uniform_int(0, 3));
        const PhysicalParams phys{uniform(0.2, 5.0), uniform(0.2, 5.0)};
        const double a = uniform(0.1, 10.0), c = uniform(0.1, 10.0);
        const double b = constraint_b(a, c, dim, phys);
        EXPECT_NEAR(constraint_a(b, c, dim, phys), a, 1e-13 * a);
        EXPECT_NEAR(constraint_c(a, b, dim, phys), c, 1e-13 * c);
    }
}

TEST(Constraint, ScalesQuadraticallyUnderJointRescaling) {
    const auto dim = dimension_reduce(3, 0);
    const double base = constraint_b(1.3, 0.7, dim, unit);
    for (double s : {2.0, 5.0}) {
        EXPECT_NEAR(constraint_b(s * 1.3, s * s * 0.7, dim, unit) / base, s * s, 1e-13 * s * s);
    }
}

TEST(Constraint, ViolationReported) {
    const auto dim = dimension_reduce(3, 0);
    EXPECT_EQ(constraint_violation({1.0, 1.0, 0.5}, dim, unit), 0.0);
    EXPECT_DOUBLE_EQ(constraint_violation({1.0, 2.0, 0.5}, dim, unit), 1.0);
    EXPECT_DOUBLE_EQ(constraint_violation({1.0, 1.0, 0.0}, dim, unit), 1.0);
    EXPECT_TRUE(std::isinf(constraint_violation({0.0, 1.0, 0.0}, dim, unit)));
    try {
        require_constraint({1.0, 2.0, 0.5}, dim, unit, 1e-10);
        FAIL() << "expected ConstraintViolation";
    } catch (const ConstraintViolation& e) {
        EXPECT_DOUBLE_EQ(e.violation(), 1.0);
    }
    EXPECT_NO_THROW(require_constraint({1.0, 1.0 + 1e-12, 0.5}, dim, unit, 1e-10));
}

TEST(CoulombGround, Examples) {
    const auto cg = coulomb_ground(1.0, dimension_reduce(3, 0), unit);
    EXPECT_TRUE(forms_near(cg.w.form(), LaurentForm{{0, u}, {-1, -u}}, 1e-15));
    EXPECT_EQ(cg.chi.power, 1.0);
    EXPECT_EQ(cg.chi.lin, 1.0);
    EXPECT_EQ(cg.epsilon, -0.5);

    const auto cg5 = coulomb_ground(1.0, dimension_reduce(5, 0), unit);
    EXPECT_EQ(cg5.chi.power, 2.0);
    EXPECT_EQ(cg5.chi.lin, 0.5);
    EXPECT_EQ(cg5.epsilon, -0.125);
    EXPECT_THROW(coulomb_ground(0.0, dimension_reduce(3, 0), unit), DomainError);
}

TEST(CoulombGround, SolvesBareCoulombRiccati) {
    for (int trial = 0; trial < 30; ++trial) {
        const auto dim = dimension_reduce(uniform_int(2, 10), uniform_int(0, 2));
        const PhysicalParams phys{uniform(0.3, 3.0), uniform(0.3, 3.0)};
        const double a = uniform(0.1, 10.0);
        const auto cg = coulomb_ground(a, dim, phys);
        const auto v = effective_potential({a, 0.0, 0.0}, dim, phys);
        EXPECT_LE(riccati_residual(cg.w, v, cg.epsilon, phys).max_abs(),
                  1e-12 * std::max(1.0, v.max_abs()));
    }
}

TEST(GroundState, P1AndP2) {
    const auto g1 = ground_state({1.0, 1.0, 0.5}, dimension_reduce(3, 0), unit);
    EXPECT_DOUBLE_EQ(g1.energy.epsilon, -0.5);
    EXPECT_DOUBLE_EQ(g1.energy.delta_epsilon, 1.5);
    EXPECT_DOUBLE_EQ(g1.energy.total, 1.0);
    EXPECT_EQ(g1.psi.power, 1.0);
    EXPECT_EQ(g1.psi.lin, 1.0);
    EXPECT_EQ(g1.psi.quad, 0.5);
    EXPECT_TRUE(forms_near(g1.full_superpotential().form(), LaurentForm{{-1, -u}, {0, u}, {1, u}},
                           1e-15));

    const auto g2 = ground_state({1.0, 0.5, 0.5}, dimension_reduce(5, 0), unit);
    EXPECT_DOUBLE_EQ(g2.energy.total, 2.375);
}

TEST(GroundState, Routing) {
    const auto dim = dimension_reduce(3, 0);
    const auto hydrogen = ground_state({1.0, 0.0, 0.0}, dim, unit);
    EXPECT_EQ(hydrogen.view, View::coulomb);
    EXPECT_EQ(hydrogen.energy.total, -0.5);
    EXPECT_TRUE(hydrogen.dw.form().is_zero());

    const auto osc = ground_state({0.0, 0.0, 0.5}, dim, unit);
    EXPECT_EQ(osc.view, View::oscillator);
    EXPECT_DOUBLE_EQ(osc.energy.total, 1.5);

    EXPECT_THROW(ground_state({1.0, 2.0, 0.5}, dim, unit), ConstraintViolation);
}

TEST(GroundState, RiccatiAndPerturbationResidualsVanish) {
    for (int trial = 0; trial < 50; ++trial) {
        const auto dim = dimension_reduce(uniform_int(2, 10), uniform_int(0, 2));
        const PhysicalParams phys{uniform(0.3, 3.0), uniform(0.3, 3.0)};
        const double a = uniform(0.1, 10.0), c = uniform(0.1, 10.0);
        const PotentialParams p{a, constraint_b(a, c, dim, phys), c};
        const auto gs = ground_state(p, dim, phys);
        const auto v = effective_potential(p, dim, phys);
        const double scale = std::max(1.0, v.max_abs());
        EXPECT_LE(riccati_residual(gs.full_superpotential(), v, gs.energy.total, phys).max_abs(),
                  1e-12 * scale);
        EXPECT_LE(
            perturbation_residual(gs.w, gs.dw, gs.dv, gs.energy.delta_epsilon, phys).max_abs(),
            1e-12 * scale);
    }
}

TEST(DualView, AgreesOnRandomSamples) {
    for (int trial = 0; trial < 100; ++trial) {
        const auto dim = dimension_reduce(uniform_int(2, 12), 0);
        const double a = uniform(0.1, 10.0), c = uniform(0.1, 10.0);
        const PotentialParams p{a, constraint_b(a, c, dim, unit), c};
        const auto check = dual_view_check(p, dim, unit);
        const double e = ground_state(p, dim, unit).energy.total;
        EXPECT_LE(check.energy_diff, 1e-12 * std::max(1.0, std::abs(e)));
        EXPECT_LE(check.param_rel_diff, 1e-12);
    }
}

TEST(DualView, OscillatorViewP1) {
    const auto osc = oscillator_view_ground({1.0, 1.0, 0.5}, dimension_reduce(3, 0), unit);
    EXPECT_DOUBLE_EQ(osc.energy.epsilon, 1.5);
    EXPECT_DOUBLE_EQ(osc.energy.delta_epsilon, -0.5);
    EXPECT_NEAR(osc.phi.lin, 1.0, 1e-15);
    EXPECT_THROW(oscillator_view_ground({1.0, 0.0, 0.0}, dimension_reduce(3, 0), unit),
                 DomainError);
}

TEST(Spectrum, Examples) {
    const auto levels = spectrum(1.0, 0.5, dimension_reduce(3, 0), unit, 2);
    ASSERT_EQ(levels.size(), 3u);
    for (int n = 0; n < 3; ++n) {
        EXPECT_EQ(levels[n].n, n);
        EXPECT_NEAR(levels[n].energy, 1.0 + n, 1e-14);
        EXPECT_NEAR(levels[n].a_n, 1.0 + n, 1e-14);
    }
    const auto lam1 = spectrum(1.0, 0.5, dimension_reduce(5, 0), unit, 2);
    for (int n = 0; n < 3; ++n) EXPECT_NEAR(lam1[n].energy, 2.0 + n, 1e-14);
    const auto osc = spectrum(0.0, 0.5, dimension_reduce(3, 0), unit, 2);
    for (int n = 0; n < 3; ++n) {
        EXPECT_NEAR(osc[n].energy, 1.5 + n, 1e-14);
        EXPECT_EQ(osc[n].a_n, 0.0);
    }
}

TEST(Spectrum, UniformSpacing) {
    const PhysicalParams phys{1.7, 0.6};
    const double b = 0.8, c = 2.3;
    const auto levels = spectrum(b, c, dimension_reduce(4, 1), phys, 6);
    const double quantum = 2.0 * phys.ladder_scale() * std::sqrt(c);
    for (std::size_t n = 1; n < levels.size(); ++n) {
        EXPECT_NEAR(levels[n].energy - levels[n - 1].energy, quantum, 1e-14 * levels[n].energy);
    }
}

TEST(Hierarchy, MemberGroundSolvesItsOwnPotential) {
    const PhysicalParams phys{1.2, 0.9};
    const double b = 0.7, c = 1.4;
    const int N = 3, l = 1;
    const auto levels = spectrum(b, c, dimension_reduce(N, l), phys, 4);
    for (int k = 0; k <= 4; ++k) {
        const auto member_dim = dimension_reduce(N, l + k);
        const auto params = hierarchy_params(b, c, dimension_reduce(N, l), phys, k);
        const auto s = hierarchy_superpotential(b, c, dimension_reduce(N, l), phys, k);
        const auto v = effective_potential(params, member_dim, phys);
        EXPECT_LE(riccati_residual(s, v, levels[k].energy, phys).max_abs(), 1e-12 * v.max_abs());
        // member k at a_k sits on the constraint surface of its own dimension
        EXPECT_NEAR(constraint_b(params.a, c, member_dim, phys), b, 1e-13);
    }
}

TEST(Hierarchy, FirstLadderState) {
    const auto st = hierarchy_states(1.0, 0.5, dimension_reduce(3, 0), unit, 1);
    EXPECT_EQ(st.power, 1.0);
    ASSERT_EQ(st.poly.size(), 3u);
    const double lead = st.poly[2];
    EXPECT_NEAR(lead, std::sqrt(2.0), 1e-14);
    EXPECT_NEAR(st.poly[1] / lead, 1.0, 1e-14);
    EXPECT_NEAR(st.poly[0] / lead, -1.5, 1e-14);
    EXPECT_EQ(st.node_count(), 1);

    const auto ground = hierarchy_states(1.0, 0.5, dimension_reduce(3, 0), unit, 0);
    EXPECT_EQ(ground.poly_degree(), 0);
    EXPECT_EQ(ground.power, 1.0);
}

TEST(Hierarchy, PureOscillatorLadderNodeMatchesEigenvector) {
    const auto dim = dimension_reduce(3, 0);
    const auto st = hierarchy_states(0.0, 0.5, dim, unit, 1);
    ASSERT_EQ(st.node_count(), 1);
    const double node = std::sqrt(1.5);
    EXPECT_NEAR(st.poly[0] / st.poly[2], -1.5, 1e-14);
    EXPECT_NEAR(st.poly[1], 0.0, 1e-15);

    const PotentialParams p{0.0, 0.0, 0.5};
    const auto v = effective_potential(p, dim, unit);
    const auto grid = build_grid(p, dim, unit);
    const auto eig = eigen_lowest(v, grid, unit, {2, true, false});
    const auto& f = eig.vectors[1].values;
    double crossing = -1.0;
    for (std::size_t i = 1; i < f.size() && grid.r(i) < 5.0; ++i) {
        if ((f[i - 1] > 0.0) != (f[i] > 0.0)) {
            const double t = f[i - 1] / (f[i - 1] - f[i]);
            crossing = grid.r(i - 1) + t * grid.h();
            break;
        }
    }
    EXPECT_NEAR(crossing, node, 1e-4);
}
