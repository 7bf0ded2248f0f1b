#pragma once

#include "pertcoul/laurent.hpp"

#include <cmath>
#include <optional>

namespace pertcoul {

/// Mass and reduced Planck constant. Both strictly positive.
struct PhysicalParams {
    double mass = 1.0;
    double hbar = 1.0;

    void validate() const;

    /// hbar / sqrt(2m), the prefactor of every superpotential derivative.
    double ladder_scale() const { return hbar / std::sqrt(2.0 * mass); }
    /// hbar^2 / 2m.
    double kinetic() const { return hbar * hbar / (2.0 * mass); }
};

/// Dimension bookkeeping for the N-dimensional radial problem.
///
/// Only M = N + 2l (through Lambda = (M - 3)/2) enters any formula, so two
/// specs with the same M produce identical results everywhere.
class DimensionSpec {
public:
    int N() const { return n_; }
    int l() const { return l_; }
    int M() const { return m_; }
    double Lambda() const { return 0.5 * (m_ - 3); }

    friend DimensionSpec dimension_reduce(int N, int l);

private:
    DimensionSpec(int n, int l) : n_(n), l_(l), m_(n + 2 * l) {}

    int n_;
    int l_;
    int m_;
};

/// Validated (N, l) -> (M, Lambda). Rejects N < 1, l < 0 and M < 2.
DimensionSpec dimension_reduce(int N, int l);

/// V(r) = -a/r + b r + c r^2.
struct PotentialParams {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    /// b, c >= 0, all finite, not all zero.
    void validate() const;
};

/// -a/r + Lambda(Lambda+1) hbar^2/(2m r^2) + b r + c r^2.
LaurentForm effective_potential(const PotentialParams& params, const DimensionSpec& dim,
                                const PhysicalParams& phys);

enum class Regime { coulomb_dominant, oscillator_dominant };

const char* to_string(Regime r);

/// Advisory tag only. With no override, the Coulomb view is preferred when a > 0
/// and a is at least as large as b and c.
Regime classify_regime(const PotentialParams& params, std::optional<Regime> requested = {});

} // namespace pertcoul
