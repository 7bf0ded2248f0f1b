#pragma once

namespace pertcoul {

/// Every numerical tolerance used by the library and the verification
/// harness, in one place.
struct Tolerances {
    double constraint_rel = 1e-10;    ///< accepting b against the closed-form constraint
    double riccati_coeff = 1e-12;     ///< per coefficient, scaled by max(1, |E|)
    double dual_view = 1e-12;         ///< energy and psi parameters, Coulomb vs oscillator view
    double eigen_abs = 1e-12;         ///< Sturm bisection, scaled by max(1, |E|)
    double eigen_vs_closed = 1e-4;    ///< finite-difference eigenvalue vs closed form
    double eigen_textbook = 5e-5;     ///< Richardson-extrapolated limits (hydrogen, oscillator)
    double h_residual = 1e-6;         ///< closed-form state on the default grid
    double h_residual_half = 2.6e-7;  ///< same at h/2
    double root_rel = 1e-13;          ///< oracle root vs constraint inversion
    double spectrum = 1e-14;          ///< level spacing
    double reproducible = 1e-12;      ///< informational quantities across repeated runs
    double order_lo = 3.6;            ///< error ratio window for a second-order scheme
    double order_hi = 4.4;
};

} // namespace pertcoul
