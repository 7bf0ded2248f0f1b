#pragma once

#include "pertcoul/closed_form.hpp"
#include "pertcoul/laurent.hpp"
#include "pertcoul/model.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace pertcoul {

/// Uniform radial grid r_i = (i + 1) h, i = 0..count-1.
///
/// The wavefunction is taken to vanish at r = 0 and at r = (count + 1) h, so
/// only interior nodes are stored.
class RadialGrid {
public:
    RadialGrid(double h, std::size_t count);

    double h() const { return h_; }
    std::size_t count() const { return count_; }
    double r(std::size_t i) const { return static_cast<double>(i + 1) * h_; }
    double r_min() const { return h_; }
    double r_max() const { return static_cast<double>(count_) * h_; }

    /// Half the step with the same outer Dirichlet point (2 count + 1 nodes).
    RadialGrid refined() const { return RadialGrid(0.5 * h_, 2 * count_ + 1); }

    bool operator==(const RadialGrid&) const = default;

    static constexpr std::size_t min_count = 100;
    static constexpr std::size_t default_intervals = 20000;
    static constexpr double nodes_per_length = 1250.0;

private:
    double h_;
    std::size_t count_;
};

struct GridOverrides {
    std::optional<double> r_max;
    std::optional<double> h;
    /// Energy whose classical turning point the box must enclose.
    std::optional<double> energy_hint;
};

/// Box covering the turning radius of the energy hint plus ten length scales,
/// and at least ten Coulomb and oscillator lengths. The step is r_max/20000,
/// or finer when needed for 1250 nodes per Coulomb or oscillator length.
/// Overrides win.
RadialGrid build_grid(const PotentialParams& params, const DimensionSpec& dim,
                      const PhysicalParams& phys, const GridOverrides& overrides = {});

struct GridFunction {
    RadialGrid grid;
    std::vector<double> values;
};

GridFunction evaluate_state(const ClosedFormState& state, const RadialGrid& grid);

/// Trapezoid integral of f^2 (the Dirichlet end points contribute zero).
double norm_squared(const GridFunction& f);

struct Normalized {
    GridFunction f;
    double scale = 1.0;  ///< N0: f_out = N0 * f_in
};

Normalized normalize(const GridFunction& f);

/// -(hbar^2/2m) second difference + V(r_i) f_i, Dirichlet at both ends.
GridFunction hamiltonian_apply(const LaurentForm& v_eff, const GridFunction& f,
                               const PhysicalParams& phys);

/// Symmetric tridiagonal discretization of the radial Hamiltonian.
struct Tridiagonal {
    std::vector<double> diag;
    double off = 0.0;

    /// Number of eigenvalues strictly below x.
    std::size_t count_below(double x) const;
    /// Gershgorin interval.
    std::pair<double, double> bounds() const;
};

Tridiagonal discretize(const LaurentForm& v_eff, const RadialGrid& grid, const PhysicalParams& phys);

struct EigenOptions {
    std::size_t k = 1;
    bool vectors = false;
    /// (4 E(h/2) - E(h)) / 3; vectors still come from the base grid.
    bool richardson = false;
};

struct EigenResult {
    std::vector<double> values;
    std::vector<GridFunction> vectors;  ///< unit norm, positive first lobe
};

/// Lowest k eigenvalues by Sturm-sequence bisection.
EigenResult eigen_lowest(const LaurentForm& v_eff, const RadialGrid& grid,
                         const PhysicalParams& phys, const EigenOptions& options = {});

/// ||H f - E f|| / ||f|| over interior nodes, skipping three at each end.
double h_residual(const GridFunction& f, double energy, const LaurentForm& v_eff,
                  const PhysicalParams& phys);
double h_residual(const ClosedFormState& state, const RadialGrid& grid, double energy,
                  const LaurentForm& v_eff, const PhysicalParams& phys);

/// Normalized overlap  int f g dr / (||f|| ||g||). Both on the same grid.
double overlap(const GridFunction& f, const GridFunction& g);

} // namespace pertcoul
