#pragma once

#include <array>
#include <initializer_list>
#include <utility>

namespace pertcoul {

/// Finite sum  sum_p c_p r^p  over integer powers p in [-2, 2].
///
/// Potentials and superpotentials of the perturbed Coulomb problem all live in
/// this space, so the Riccati algebra can be done exactly on coefficients.
/// Any operation whose result would need a power outside [-2, 2] throws
/// DomainError instead of truncating.
class LaurentForm {
public:
    static constexpr int min_power = -2;
    static constexpr int max_power = 2;

    LaurentForm() = default;
    LaurentForm(std::initializer_list<std::pair<int, double>> terms);

    double operator[](int power) const;
    void set(int power, double value);

    double operator()(double r) const;

    LaurentForm operator+(const LaurentForm& rhs) const;
    LaurentForm operator-(const LaurentForm& rhs) const;
    LaurentForm operator-() const;
    LaurentForm operator*(double s) const;
    friend LaurentForm operator*(double s, const LaurentForm& f) { return f * s; }

    /// Product of two forms. Throws if a nonzero product term leaves [-2, 2].
    LaurentForm operator*(const LaurentForm& rhs) const;
    LaurentForm squared() const { return *this * *this; }

    /// d/dr, mapping c r^p to p c r^(p-1). Throws for a nonzero r^-2 term.
    LaurentForm derivative() const;

    double constant() const { return (*this)[0]; }
    LaurentForm without_constant() const;

    /// Largest |c_p|.
    double max_abs() const;
    bool is_zero() const { return max_abs() == 0.0; }

    /// True when every nonzero power lies in [lo, hi].
    bool powers_within(int lo, int hi) const;

    bool operator==(const LaurentForm& rhs) const = default;

private:
    static std::size_t slot(int power);

    std::array<double, 5> c_{};
};

} // namespace pertcoul
