#ifndef RADIALEP_PERIOD_HPP
#define RADIALEP_PERIOD_HPP

#include <span>
#include <vector>

#include "radialep/potential.hpp"

namespace radialep {

/// Radii bounding an orbit: V(x1) = V(x2) = E with x1 <= argmin <= x2.
struct TurningPoints {
    double x1;
    double x2;
};

/// Absolute energy band below which an orbit is treated as the equilibrium
/// point and the period is the small-oscillation limit.
inline constexpr double kDegenerateEnergyBand = 1e-9;

/// Solve V(x) = E on both sides of the minimum.  Brackets grow geometrically
/// (factor 2) from argmin and are refined to machine precision.  Throws
/// DegenerateOrbitError when E does not separate from the well floor.
TurningPoints turning_points(double E, const PotentialCurve& pot);

/// 2 pi / sqrt(V''(argmin)): the period of infinitesimal oscillations.
double small_oscillation_period(const PotentialCurve& pot);

/// Period of the orbit at energy E,
///     T(E) = 2 int_{x1}^{x2} dx / sqrt(2 (E - V(x))).
/// The substitution x = x1 + (x2 - x1) sin^2(theta) removes both
/// inverse-square-root endpoint singularities, so the integrand is smooth.
/// Within kDegenerateEnergyBand of the floor the small-oscillation limit is
/// returned.  E below the floor is a domain error; an unmet quadrature
/// tolerance raises QuadratureError carrying the estimate.
double period(double E, const PotentialCurve& pot, double rel_tol = 1e-10);

/// H(x) = ((V')^2 - 2 (V - Vmin) V'') / (V')^3, the kernel of the period
/// derivative.  Throws std::domain_error where |V'(x)| < 1e-14.
double h_function(double x, const PotentialCurve& pot);

/// T'(E) evaluated through the H-kernel:
///     T'(E) = (1/(sqrt(2) Es^{3/2})) int_0^{Es} (1 - y/Es)^{-1/2}
///             (H(x2(y)) - H(x1(y))) dy,      Es = E - Vmin,
/// with the same sin^2 substitution for the endpoint weight.
double period_derivative(double E, const PotentialCurve& pot, double rel_tol = 1e-9);

/// Small-energy slope constant c_V = (1/6) d^2 (d-1) (d-4); T'(E) tends to
/// pi c_V / d^{7/2} at the bottom of the normalized well.
double c_v(int d);

/// The same constant from fourth-order finite differences of the normalized
/// well at its minimum: cross-check path for c_v.
double c_v_numeric(int d);

struct PeriodTable {
    std::vector<double> energy;
    std::vector<double> period;
    int d = 0;
    double m = 1.0;
    double rel_tol = 1e-10;
};

/// Tabulate T over an increasing energy grid.
PeriodTable period_table(std::span<const double> energies, const PotentialCurve& pot,
                         double rel_tol = 1e-10);

struct ConstancyReport {
    int d = 0;
    double sup_deviation = 0.0;   // sup_E |T(E) - tau_d|
    std::vector<double> energy;   // evaluation grid (absolute energies, m = 1)
    std::vector<double> period;
};

/// sup |T(E) - tau_d| over 200 energies log-spaced in E - e_min within
/// [1e-4, 1e2], mass 1.  Flat (below 1e-8) exactly in four dimensions.
ConstancyReport constancy_report(int d);

}  // namespace radialep

#endif
