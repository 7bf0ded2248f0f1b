#include "pertcoul/susy.hpp"

#include "pertcoul/error.hpp"
#include "pertcoul/polynomial.hpp"

#include <cmath>
#include <utility>

namespace pertcoul {

Superpotential::Superpotential(LaurentForm form) : form_(std::move(form)) {
    if (!form_.powers_within(-1, 1)) {
        throw DomainError("superpotential powers must lie in {-1, 0, 1}");
    }
}

Superpotential superpotential_from_state(const ClosedFormState& state, const PhysicalParams& phys) {
    if (state.poly_degree() != 0) {
        throw DomainError("log-derivative not a Laurent form");
    }
    // chi'/chi = q/r - lin - 2 quad r
    const double g = phys.ladder_scale();
    LaurentForm f;
    f.set(-1, -g * state.power);
    f.set(0, g * state.lin);
    f.set(1, 2.0 * g * state.quad);
    return Superpotential(f);
}

LaurentForm riccati_image(const Superpotential& s, RiccatiSign sign, const PhysicalParams& phys) {
    const double g = phys.ladder_scale();
    const LaurentForm sq = s.form().squared();
    const LaurentForm ds = s.form().derivative() * g;
    return sign == RiccatiSign::minus ? sq - ds : sq + ds;
}

LaurentForm riccati_residual(const Superpotential& s, const LaurentForm& v_eff, double energy,
                             const PhysicalParams& phys) {
    LaurentForm rhs = v_eff;
    rhs.set(0, v_eff[0] - energy);
    return riccati_image(s, RiccatiSign::minus, phys) - rhs;
}

LaurentForm perturbation_residual(const Superpotential& w, const Superpotential& dw,
                                  const LaurentForm& dv, double d_eps, const PhysicalParams& phys) {
    const double g = phys.ladder_scale();
    const LaurentForm lhs =
        dw.form().squared() - dw.form().derivative() * g + (w.form() * dw.form()) * 2.0;
    LaurentForm rhs = dv;
    rhs.set(0, dv[0] - d_eps);
    return lhs - rhs;
}

LaurentForm PartnerPotentials::potential_minus() const {
    LaurentForm v = image_minus;
    v.set(0, v[0] + ground_energy);
    return v;
}

LaurentForm PartnerPotentials::potential_plus() const {
    LaurentForm v = image_plus;
    v.set(0, v[0] + ground_energy);
    return v;
}

PartnerPotentials partner_potentials(const Superpotential& s, const PhysicalParams& phys) {
    PartnerPotentials out;
    out.image_minus = riccati_image(s, RiccatiSign::minus, phys);
    out.image_plus = riccati_image(s, RiccatiSign::plus, phys);
    out.ground_energy = -out.image_minus.constant();
    return out;
}

ShapeInvarianceComparison shape_invariance_compare(const Superpotential& s_alpha0,
                                                   const Superpotential& s_alpha1,
                                                   const PhysicalParams& phys) {
    if (s_alpha0.form()[1] != s_alpha1.form()[1]) {
        throw DomainError("b,c not held fixed");
    }
    const LaurentForm diff = partner_potentials(s_alpha0, phys).potential_plus() -
                             partner_potentials(s_alpha1, phys).potential_minus();
    return {diff.constant(), diff.without_constant()};
}

namespace {

// (sign g d/dr + S) applied to P r^q e^(-lin r - quad r^2), returned with one
// power of r moved into the polynomial:
//   new P = sign g r P' + P [(s_-1 + sign g q) + (s_0 - sign g lin) r + (s_1 - 2 sign g quad) r^2]
ClosedFormState apply_first_order(double sign, const Superpotential& s, const ClosedFormState& st,
                                  const PhysicalParams& phys) {
    const double g = sign * phys.ladder_scale();
    const LaurentForm& f = s.form();
    const std::vector<double> mult{f[-1] + g * st.power, f[0] - g * st.lin, f[1] - 2.0 * g * st.quad};

    std::vector<double> r_dp{0.0};
    const auto dp = poly::derivative(st.poly);
    r_dp.insert(r_dp.end(), dp.begin(), dp.end());
    for (double& v : r_dp) v *= g;

    ClosedFormState out;
    out.poly = poly::trimmed(poly::add(r_dp, poly::multiply(st.poly, mult)));
    out.power = st.power - 1.0;
    out.lin = st.lin;
    out.quad = st.quad;
    return out;
}

} // namespace

ClosedFormState ladder_apply(const Superpotential& s, const ClosedFormState& state,
                             const PhysicalParams& phys) {
    if (!(state.power > 0.0)) {
        throw DomainError("ladder_apply needs a state regular at the origin (power > 0)");
    }
    return apply_first_order(-1.0, s, state, phys);
}

ClosedFormState annihilator_apply(const Superpotential& s, const ClosedFormState& state,
                                  const PhysicalParams& phys) {
    return apply_first_order(+1.0, s, state, phys);
}

} // namespace pertcoul
