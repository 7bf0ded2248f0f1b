#pragma once

#include "pertcoul/closed_form.hpp"
#include "pertcoul/laurent.hpp"
#include "pertcoul/model.hpp"

namespace pertcoul {

/// Superpotential S(r) = s_{-1}/r + s_0 + s_1 r.
class Superpotential {
public:
    Superpotential() = default;
    /// Throws DomainError if `form` has any power outside {-1, 0, 1}.
    explicit Superpotential(LaurentForm form);

    const LaurentForm& form() const { return form_; }
    double operator()(double r) const { return form_(r); }

    Superpotential operator+(const Superpotential& rhs) const {
        return Superpotential(form_ + rhs.form_);
    }

private:
    LaurentForm form_;
};

/// S = -(hbar/sqrt(2m)) d/dr log(state). Only nodeless states (P of degree 0)
/// have a Laurent log-derivative; anything else throws DomainError.
Superpotential superpotential_from_state(const ClosedFormState& state, const PhysicalParams& phys);

enum class RiccatiSign { minus, plus };

/// S^2 -+ (hbar/sqrt(2m)) S'. With `minus` this is V - E for the state that S
/// factorizes; with `plus` it is the partner potential minus the same E.
LaurentForm riccati_image(const Superpotential& s, RiccatiSign sign, const PhysicalParams& phys);

/// riccati_image(S, minus) - (V_eff - E). The zero form iff S and E solve the
/// full radial equation exactly.
LaurentForm riccati_residual(const Superpotential& s, const LaurentForm& v_eff, double energy,
                             const PhysicalParams& phys);

/// dW^2 - (hbar/sqrt(2m)) dW' + 2 W dW - (dV - d_eps): the first-order
/// perturbation equation left minus right.
LaurentForm perturbation_residual(const Superpotential& w, const Superpotential& dw,
                                  const LaurentForm& dv, double d_eps, const PhysicalParams& phys);

/// Both Riccati images of S and the ground energy E0- of the minus partner.
///
/// The physical potentials are V-+ = image-+ + E0-, where E0- is fixed by
/// requiring V- to carry no constant term (the potentials in this problem
/// family never do).
struct PartnerPotentials {
    LaurentForm image_minus;
    LaurentForm image_plus;
    double ground_energy = 0.0;

    LaurentForm potential_minus() const;
    LaurentForm potential_plus() const;
};

PartnerPotentials partner_potentials(const Superpotential& s, const PhysicalParams& phys);

/// V+(alpha0) = V-(alpha1) + R + mismatch.
struct ShapeInvarianceComparison {
    double remainder = 0.0;   ///< R, the constant part
    LaurentForm mismatch;     ///< nonconstant remainder; zero iff shape invariant
};

/// Compares the plus partner at alpha0 with the minus partner at alpha1.
/// Both superpotentials must share the r coefficient (same c); otherwise
/// throws DomainError("b,c not held fixed").
ShapeInvarianceComparison shape_invariance_compare(const Superpotential& s_alpha0,
                                                   const Superpotential& s_alpha1,
                                                   const PhysicalParams& phys);

/// A+ state with A+ = -(hbar/sqrt(2m)) d/dr + S. Requires state.power > 0.
/// The result keeps (lin, quad), lowers the power by one and raises the
/// polynomial degree by two in the generic case. Not normalized.
ClosedFormState ladder_apply(const Superpotential& s, const ClosedFormState& state,
                             const PhysicalParams& phys);

/// A state with A = +(hbar/sqrt(2m)) d/dr + S. Annihilates the ground state
/// that S was built from.
ClosedFormState annihilator_apply(const Superpotential& s, const ClosedFormState& state,
                                  const PhysicalParams& phys);

} // namespace pertcoul
