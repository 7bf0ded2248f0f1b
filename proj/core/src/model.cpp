#include "pertcoul/model.hpp"

#include "pertcoul/error.hpp"

#include <algorithm>
#include <string>

namespace pertcoul {

void PhysicalParams::validate() const {
    if (!(mass > 0.0) || !(hbar > 0.0) || !std::isfinite(mass) || !std::isfinite(hbar)) {
        throw DomainError("mass and hbar must be positive and finite");
    }
}

DimensionSpec dimension_reduce(int N, int l) {
    if (N < 1) throw DomainError("dimension N must be >= 1, got " + std::to_string(N));
    if (l < 0) throw DomainError("angular momentum l must be >= 0, got " + std::to_string(l));
    if (N + 2 * l < 2) {
        throw DomainError("M = N + 2l = " + std::to_string(N + 2 * l) +
                          " < 2: r^(Lambda+1) is not normalizable");
    }
    return DimensionSpec(N, l);
}

void PotentialParams::validate() const {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
        throw DomainError("potential parameters must be finite");
    }
    if (b < 0.0 || c < 0.0) throw DomainError("b and c must be non-negative");
    if (a == 0.0 && b == 0.0 && c == 0.0) throw DomainError("a, b and c are all zero");
}

LaurentForm effective_potential(const PotentialParams& params, const DimensionSpec& dim,
                                const PhysicalParams& phys) {
    const double lam = dim.Lambda();
    LaurentForm v;
    v.set(-2, lam * (lam + 1.0) * phys.kinetic());
    v.set(-1, -params.a);
    v.set(1, params.b);
    v.set(2, params.c);
    return v;
}

const char* to_string(Regime r) {
    return r == Regime::coulomb_dominant ? "coulomb-dominant" : "oscillator-dominant";
}

Regime classify_regime(const PotentialParams& params, std::optional<Regime> requested) {
    if (requested) return *requested;
    if (params.a > 0.0 && params.a >= std::max(params.b, params.c)) {
        return Regime::coulomb_dominant;
    }
    return Regime::oscillator_dominant;
}

} // namespace pertcoul
