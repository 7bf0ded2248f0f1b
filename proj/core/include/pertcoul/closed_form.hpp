#pragma once

#include <optional>
#include <vector>

namespace pertcoul {

/// Radial function  P(r) r^q exp(-lin r - quad r^2).
///
/// Holds the Coulomb factor chi, the moderating factor phi, their product psi,
/// ladder-generated states and oracle eigenstates alike. `norm` is the grid
/// normalization constant N0 once somebody has computed it.
struct ClosedFormState {
    std::vector<double> poly{1.0};
    double power = 0.0;
    double lin = 0.0;
    double quad = 0.0;
    std::optional<double> norm;

    /// Square integrable on (0, inf): q > -1/2 and some exponential decay.
    bool normalizable() const;

    int poly_degree() const;

    /// Zeros of the state in r > 0 (positive roots of P).
    int node_count() const;

    /// Unnormalized value at r > 0, computed through logs so large q and
    /// strong decay neither overflow nor underflow prematurely.
    double value(double r) const;

    /// Pointwise product: polynomials multiply, exponents add.
    ClosedFormState operator*(const ClosedFormState& rhs) const;
};

} // namespace pertcoul
