#include "pertcoul/closed_form.hpp"

#include "pertcoul/polynomial.hpp"

#include <cmath>

namespace pertcoul {

bool ClosedFormState::normalizable() const {
    if (poly::degree(poly) < 0) return false;
    return power > -0.5 && (quad > 0.0 || lin > 0.0);
}

int ClosedFormState::poly_degree() const { return poly::degree(poly); }

int ClosedFormState::node_count() const { return poly::count_positive_roots(poly); }

double ClosedFormState::value(double r) const {
    const double p = poly::evaluate(poly, r);
    if (p == 0.0) return 0.0;
    const double log_mag = std::log(std::abs(p)) + power * std::log(r) - lin * r - quad * r * r;
    return std::copysign(std::exp(log_mag), p);
}

ClosedFormState ClosedFormState::operator*(const ClosedFormState& rhs) const {
    ClosedFormState out;
    out.poly = poly::multiply(poly, rhs.poly);
    out.power = power + rhs.power;
    out.lin = lin + rhs.lin;
    out.quad = quad + rhs.quad;
    return out;
}

} // namespace pertcoul
