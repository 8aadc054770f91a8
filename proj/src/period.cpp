#include "radialep/period.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "radialep/errors.hpp"
#include "radialep/numerics.hpp"

namespace radialep {

namespace {
constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr int kMaxBracketSteps = 4000;  // the 2-D inner radius shrinks like e^{-2 pi E}
}  // namespace

TurningPoints turning_points(double E, const PotentialCurve& pot) {
    const double floor = pot.min_value();
    const double x0 = pot.argmin();
    const double sep = 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(floor));
    if (!(E - floor > sep))
        throw DegenerateOrbitError("energy level does not separate from the well floor");

    auto residual = [&](double x) { return pot.value(x) - E; };

    double lo = x0, lo_prev = x0;
    for (int i = 0; residual(lo) < 0.0; ++i) {
        if (i >= kMaxBracketSteps)
            throw std::runtime_error("turning_points: inner bracket expansion failed");
        lo_prev = lo;
        lo *= 0.5;
    }
    double hi = x0, hi_prev = x0;
    for (int i = 0; residual(hi) < 0.0; ++i) {
        if (i >= kMaxBracketSteps)
            throw std::runtime_error("turning_points: outer bracket expansion failed");
        hi_prev = hi;
        hi *= 2.0;
    }

    return TurningPoints{num::bracket_root(residual, lo, lo_prev),
                         num::bracket_root(residual, hi_prev, hi)};
}

double small_oscillation_period(const PotentialCurve& pot) {
    return 2.0 * std::numbers::pi / std::sqrt(pot.deriv2(pot.argmin()));
}

double period(double E, const PotentialCurve& pot, double rel_tol) {
    const double floor = pot.min_value();
    const double shifted_energy = E - floor;
    if (shifted_energy < -kDegenerateEnergyBand)
        throw std::domain_error("energy below the minimum of the well");
    if (shifted_energy <= kDegenerateEnergyBand) return small_oscillation_period(pot);

    const auto [x1, x2] = turning_points(E, pot);
    const double width = x2 - x1;
    // Endpoint limits of the transformed integrand; used if roundoff makes
    // E - V(x) nonpositive within ~1e-8 of a turning point.
    const double limit_lo = std::sqrt(2.0 * width / std::abs(pot.deriv(x1)));
    const double limit_hi = std::sqrt(2.0 * width / std::abs(pot.deriv(x2)));

    auto integrand = [&](double theta) {
        const double s = std::sin(theta), c = std::cos(theta);
        const double x = x1 + width * s * s;
        const double gap = shifted_energy - pot.shifted(x);
        if (!(gap > 0.0)) return theta < kHalfPi * 0.5 ? c * limit_lo : s * limit_hi;
        return 2.0 * width * s * c / std::sqrt(2.0 * gap);
    };

    return 2.0 * num::integrate(integrand, 0.0, kHalfPi, rel_tol,
                                1e-13 * small_oscillation_period(pot));
}

double h_function(double x, const PotentialCurve& pot) {
    const double v1 = pot.deriv(x);
    if (std::abs(v1) < 1e-14)
        throw std::domain_error("h_function is singular where V' vanishes");
    const double w = pot.shifted(x);
    const double v2 = pot.deriv2(x);
    const double value = (v1 * v1 - 2.0 * w * v2) / (v1 * v1 * v1);
    if (!std::isfinite(value)) throw std::domain_error("h_function overflow at x = " + std::to_string(x));
    return value;
}

double period_derivative(double E, const PotentialCurve& pot, double rel_tol) {
    const double floor = pot.min_value();
    const double shifted_energy = E - floor;
    if (shifted_energy <= kDegenerateEnergyBand)
        throw std::domain_error("period_derivative requires E above the well floor");

    const double degenerate_sep =
        8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(floor));

    auto integrand = [&](double phi) {
        const double s = std::sin(phi);
        const double y = shifted_energy * s * s;
        if (y <= degenerate_sep) return 0.0;  // H(x2) - H(x1) -> 0 like sqrt(y)
        const auto [x1, x2] = turning_points(floor + y, pot);
        return s * (h_function(x2, pot) - h_function(x1, pot));
    };

    const double integral =
        num::integrate(integrand, 0.0, kHalfPi, rel_tol, /*abs_floor=*/1e-10);
    return std::sqrt(2.0 / shifted_energy) * integral;
}

double c_v(int d) {
    if (d < 2) throw std::invalid_argument("dimension must be an integer >= 2");
    return d * d * (d - 1.0) * (d - 4.0) / 6.0;
}

double c_v_numeric(int d) {
    const NormalizedPotential pot(d);
    auto f = [&](double x) { return pot.value(x); };
    const double h = 5e-3;
    const double v2 = num::deriv2(f, 1.0, h);
    const double v3 = num::deriv3(f, 1.0, h);
    const double v4 = num::deriv4(f, 1.0, h);
    return -0.25 * v2 * v4 + (5.0 / 12.0) * v3 * v3;
}

PeriodTable period_table(std::span<const double> energies, const PotentialCurve& pot,
                         double rel_tol) {
    PeriodTable table;
    table.rel_tol = rel_tol;
    if (auto* eff = dynamic_cast<const EffectivePotential*>(&pot)) {
        table.d = eff->spec().d;
        table.m = eff->spec().m;
    } else if (auto* norm = dynamic_cast<const NormalizedPotential*>(&pot)) {
        table.d = norm->dim();
    }
    double prev = -std::numeric_limits<double>::infinity();
    for (double E : energies) {
        if (!(E > prev)) throw std::invalid_argument("period_table: energies must be strictly increasing");
        prev = E;
        table.energy.push_back(E);
        table.period.push_back(period(E, pot, rel_tol));
    }
    return table;
}

ConstancyReport constancy_report(int d) {
    const EffectivePotential pot{PotentialSpec(d, 1.0)};
    const double floor = pot.min_value();
    const double tau = tau_d(d);

    ConstancyReport report;
    report.d = d;
    const int n = 200;
    const double lo = std::log(1e-4), hi = std::log(1e2);
    for (int i = 0; i < n; ++i) {
        const double offset = std::exp(lo + (hi - lo) * i / (n - 1.0));
        const double E = floor + offset;
        const double T = period(E, pot);
        report.energy.push_back(E);
        report.period.push_back(T);
        report.sup_deviation = std::max(report.sup_deviation, std::abs(T - tau));
    }
    return report;
}

}  // namespace radialep
