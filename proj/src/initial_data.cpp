#include "radialep/initial_data.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "radialep/errors.hpp"
#include "radialep/numerics.hpp"
#include "radialep/period.hpp"
#include "radialep/potential.hpp"

namespace radialep {

namespace {

void require_same_grid(const RadialProfile& a, const RadialProfile& b) {
    if (a.size() != b.size() ||
        !std::equal(a.grid().begin(), a.grid().end(), b.grid().begin()))
        throw std::invalid_argument("profiles must share one grid");
}

double max_abs(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

InitialData InitialData::from_profiles(int d, RadialProfile P0, RadialProfile u0) {
    return with_mass(d, P0, u0, derive_mass(P0, d));
}

InitialData InitialData::with_mass(int d, RadialProfile P0, RadialProfile u0,
                                   RadialProfile m0) {
    if (d < 2) throw std::invalid_argument("dimension must be an integer >= 2");
    require_same_grid(P0, u0);
    require_same_grid(P0, m0);

    for (std::size_t i = 0; i < P0.size(); ++i)
        if (P0.values()[i] < 0.0)
            throw InconsistentDataError("P0 negative at node " + std::to_string(i));
    if (!(P0.values().front() > 0.0))
        throw InconsistentDataError("r^{1-d} P0 must stay positive toward the origin");

    const double r_first = P0.front_radius();
    double max_slope = 0.0;
    for (double r : u0.grid()) max_slope = std::max(max_slope, std::abs(u0.derivative(r)));
    if (std::abs(u0.values().front()) >
        max_slope * r_first * (1.0 + 1e-6) + 1e-12 * std::max(1.0, max_abs(u0.values())))
        throw InconsistentDataError("u0 does not extrapolate to zero at the origin");

    if (!(m0.values().front() > 0.0))
        throw InconsistentDataError("enclosed mass must be positive");
    for (std::size_t i = 0; i + 1 < m0.size(); ++i)
        if (m0.values()[i + 1] < m0.values()[i])
            throw InconsistentDataError("enclosed mass must be nondecreasing");

    InitialData data;
    data.d_ = d;
    data.R0_ = P0.back_radius();
    data.P0_ = std::move(P0);
    data.u0_ = std::move(u0);
    data.m0_ = std::move(m0);
    return data;
}

double InitialData::p0_at(double r) const {
    if (r <= 0.0) return 0.0;
    if (r < P0_.front_radius())
        return std::pow(r / P0_.front_radius(), d_ - 1.0) * P0_.values().front();
    if (r > P0_.back_radius()) return 0.0;
    return P0_(r);
}

double InitialData::u0_at(double r) const {
    if (r <= 0.0) return 0.0;
    if (r < u0_.front_radius()) return u0_.values().front() * r / u0_.front_radius();
    if (r > u0_.back_radius()) return u0_.values().back();
    return u0_(r);
}

double InitialData::m0_at(double r) const {
    if (r <= 0.0) return 0.0;
    if (r < m0_.front_radius())
        return m0_.values().front() * std::pow(r / m0_.front_radius(), static_cast<double>(d_));
    if (r > m0_.back_radius()) return m0_.values().back();
    return m0_(r);
}

RadialProfile derive_mass(const RadialProfile& P0, int d) {
    if (d < 2) throw std::invalid_argument("dimension must be an integer >= 2");
    for (std::size_t i = 0; i < P0.size(); ++i)
        if (P0.values()[i] < 0.0)
            throw InconsistentDataError("P0 negative at node " + std::to_string(i));

    const auto grid = P0.grid();
    std::vector<double> mass(grid.size());
    // Below the first node P0 follows (r/r0)^{d-1} P0(r0), so the head
    // integral is P0(r0) r0 / d.
    mass[0] = P0.values().front() * grid.front() / d;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        mass[i + 1] = mass[i] + P0.integrate(grid[i], grid[i + 1]);
    return RadialProfile(std::vector<double>(grid.begin(), grid.end()), std::move(mass));
}

RadialProfile energy_profile(const InitialData& data) {
    const auto grid = data.P0().grid();
    const PotentialSpec unit(data.dim(), 1.0);
    std::vector<double> energy(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double r = grid[i];
        const double u = data.u0().values()[i];
        const double m = data.m0().values()[i];
        if (!(m > 0.0)) throw InconsistentDataError("enclosed mass vanishes at an interior node");
        energy[i] = 0.5 * u * u + m * newtonian(r, unit) + 0.5 * r * r;
    }
    return RadialProfile(std::vector<double>(grid.begin(), grid.end()), std::move(energy));
}

RadialProfile c0_profile(const InitialData& data) {
    const RadialProfile energy = energy_profile(data);
    const auto grid = data.P0().grid();
    std::vector<double> c0(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double m = data.m0().values()[i];
        c0[i] = normalize_energy(energy.values()[i], PotentialSpec(data.dim(), m));
    }
    return RadialProfile(std::vector<double>(grid.begin(), grid.end()), std::move(c0));
}

double theta_from_values(int d, double r, double P0, double u0, double du0, double m0,
                         double u0_scale) {
    if (!(m0 > 0.0)) throw InconsistentDataError("theta needs positive enclosed mass");
    const double p_over = P0 * r / (d * m0);
    const double eps_u = 1e-8 * std::max(1.0, u0_scale);
    if (std::abs(u0) > eps_u) return (1.0 - p_over) / u0;

    const double repulsion = m0 * force_coeff(d) * std::pow(r, 1.0 - d);
    const double balance = r - repulsion;  // V_eff'(r; m0)
    const double eps_b = 1e-8 * std::max(1.0, r + repulsion);
    if (std::abs(balance) > eps_b) return (P0 * u0 / d - m0 * du0) / (m0 * balance);

    throw InconsistentDataError("theta undefined: both branch denominators vanish at r = " +
                                std::to_string(r));
}

double theta_at(double r, const InitialData& data) {
    const double du0 = r < data.u0().front_radius()
                           ? data.u0().values().front() / data.u0().front_radius()
                           : data.u0().derivative(r);
    return theta_from_values(data.dim(), r, data.p0_at(r), data.u0_at(r), du0, data.m0_at(r),
                             max_abs(data.u0().values()));
}

RadialProfile theta_profile(const InitialData& data) {
    const RadialProfile c0 = c0_profile(data);
    const double c_min = e_min(PotentialSpec(data.dim(), 1.0));
    const auto [lo, hi] = std::minmax_element(c0.values().begin(), c0.values().end());
    const double mean = 0.5 * (*lo + *hi);
    if ((*hi - *lo) > 1e-6 * std::max(1.0, std::abs(mean)))
        throw InconsistentDataError("theta_profile requires data passing the level condition");
    if (mean - c_min <= 1e-8 * std::max(1.0, std::abs(c_min)))
        throw std::domain_error("theta is undefined on stationary data");

    const int d = data.dim();
    const double u0_scale = max_abs(data.u0().values());
    const auto grid = data.P0().grid();
    std::vector<double> theta(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double r = grid[i];
        const double P0 = data.P0().values()[i];
        const double u0 = data.u0().values()[i];
        const double du0 = data.u0().derivative(r);
        const double m0 = data.m0().values()[i];
        theta[i] = theta_from_values(d, r, P0, u0, du0, m0, u0_scale);

        // Both branches must agree where both denominators are alive.
        const double repulsion = m0 * force_coeff(d) * std::pow(r, 1.0 - d);
        const double balance = r - repulsion;
        if (std::abs(u0) > 1e-8 * std::max(1.0, u0_scale) &&
            std::abs(balance) > 1e-8 * std::max(1.0, r + repulsion)) {
            const double first = (1.0 - P0 * r / (d * m0)) / u0;
            const double second = (P0 * u0 / d - m0 * du0) / (m0 * balance);
            if (std::abs(first - second) > 1e-6 * std::max(1.0, std::abs(first)))
                throw InconsistentDataError(
                    "theta branches disagree at r = " + std::to_string(r) +
                    ": data violates the consistency identity");
        }
    }
    return RadialProfile(std::vector<double>(grid.begin(), grid.end()), std::move(theta));
}

double levelset_min_f(double r, const InitialData& data) {
    const int d = data.dim();
    const double m = data.m0_at(r);
    const double p0dm = data.p0_at(r) / (d * m);
    const double theta = theta_at(r, data);
    const EffectivePotential pot{PotentialSpec(d, m)};
    const double energy = 0.5 * data.u0_at(r) * data.u0_at(r) +
                          m * newtonian(r, pot.spec()) + 0.5 * r * r;

    if (energy - pot.min_value() <= kDegenerateEnergyBand) return p0dm * pot.argmin();

    const auto [x1, x2] = turning_points(energy, pot);
    if (theta == 0.0) return p0dm * x1;

    const double amp = std::abs(theta);
    auto g = [&](double x) {
        const double gap = std::max(energy - pot.value(x), 0.0);
        return -amp * std::sqrt(2.0 * gap) + p0dm * x;
    };

    const int samples = 401;
    int best = 0;
    double best_val = std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i) {
        const double x = x1 + (x2 - x1) * i / (samples - 1.0);
        const double v = g(x);
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }
    const double lo = x1 + (x2 - x1) * std::max(best - 1, 0) / (samples - 1.0);
    const double hi = x1 + (x2 - x1) * std::min(best + 1, samples - 1) / (samples - 1.0);
    const double x_min = num::golden_min(g, lo, hi, 1e-13);
    return std::min(best_val, g(x_min));
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Stationary: return "Stationary";
        case Verdict::GlobalSmooth: return "GlobalSmooth";
        case Verdict::FiniteTimeBlowup: return "FiniteTimeBlowup";
        case Verdict::InconsistentWithGlobal: return "Inconsistent-with-global";
        case Verdict::Inconsistent: return "Inconsistent";
    }
    return "Inconsistent";
}

ConditionReport classify(const InitialData& data, const ClassifyTolerances& tol) {
    ConditionReport report;
    report.C_min = e_min(PotentialSpec(data.dim(), 1.0));
    try {
        const RadialProfile c0 = c0_profile(data);
        const auto [lo, hi] = std::minmax_element(c0.values().begin(), c0.values().end());
        double mean = 0.0;
        for (double v : c0.values()) mean += v;
        mean /= static_cast<double>(c0.size());
        report.C0_mean = mean;
        report.C0_max_deviation = (*hi - *lo) / std::max(1.0, std::abs(mean));

        if (report.C0_max_deviation > tol.c0_rel_spread) {
            report.verdict = Verdict::InconsistentWithGlobal;
            report.detail = "condition 1 violated: normalized energy level is not constant";
            return report;
        }

        if (std::abs(mean - report.C_min) <= tol.stationary_band * std::max(1.0, std::abs(report.C_min))) {
            const int d = data.dim();
            bool balanced = true;
            for (std::size_t i = 0; i < data.P0().size() && balanced; ++i) {
                const double r = data.P0().grid()[i];
                const double m0 = data.m0().values()[i];
                const double repulsion = m0 * force_coeff(d) * std::pow(r, 1.0 - d);
                if (std::abs(data.u0().values()[i]) > 1e-8 * std::max(1.0, data.outer_radius()) ||
                    std::abs(r - repulsion) > 1e-8 * std::max(1.0, r + repulsion))
                    balanced = false;
            }
            if (balanced) {
                report.verdict = Verdict::Stationary;
            } else {
                report.verdict = Verdict::Inconsistent;
                report.detail = "level sits at the stationary value but the data is not at rest";
            }
            return report;
        }

        double min_f = std::numeric_limits<double>::infinity();
        std::optional<double> offender;
        for (double r : data.P0().grid()) {
            const double v = levelset_min_f(r, data);
            if (v < min_f) {
                min_f = v;
                offender = r;
            }
        }
        report.min_levelset_f = min_f;
        report.marginal = std::abs(min_f) < tol.marginal_band;
        if (min_f > 0.0) {
            report.verdict = Verdict::GlobalSmooth;
        } else {
            report.verdict = Verdict::FiniteTimeBlowup;
            report.offending_radius = offender;
        }
        return report;
    } catch (const InconsistentDataError& e) {
        report.verdict = Verdict::Inconsistent;
        report.detail = e.what();
        return report;
    }
}

InitialData make_stationary(int d, double R0, int nodes) {
    const double fc = force_coeff(d);
    auto grid = log_grid(R0, nodes);
    std::vector<double> mass(grid.size()), density(grid.size()), velocity(grid.size(), 0.0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        // Force balance m c r^{1-d} = r per node.
        mass[i] = std::pow(grid[i], static_cast<double>(d)) / fc;
        density[i] = d * std::pow(grid[i], d - 1.0) / fc;
    }
    auto gcopy = grid;
    return InitialData::with_mass(d, RadialProfile(std::move(grid), std::move(density)),
                                  RadialProfile(std::move(gcopy), std::move(velocity)),
                                  RadialProfile(log_grid(R0, nodes), std::move(mass)));
}

namespace {

double compliant_energy(int d, double C0, double m0) {
    if (d == 2) return m0 * (C0 - std::log(m0) / (4.0 * std::numbers::pi));
    return C0 * std::pow(m0, 2.0 / d);
}

}  // namespace

InitialData make_compliant(int d, double R0, const CompliantParams& params) {
    const double c_min = e_min(PotentialSpec(d, 1.0));
    if (!(params.C0 > c_min))
        throw std::invalid_argument("compliant data needs C0 above the stationary level");
    if (!(params.A > 0.0)) throw std::invalid_argument("mass amplitude must be positive");

    const PotentialSpec unit(d, 1.0);
    auto grid = log_grid(R0, params.nodes, params.span_frac);
    std::vector<double> mass(grid.size()), density(grid.size()), velocity(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double r = grid[i];
        const double r2 = r * r;
        const double m0 = params.A * std::pow(r, static_cast<double>(d)) * (1.0 + params.B * r2);
        const double P0 =
            params.A * (d * std::pow(r, d - 1.0) + (d + 2) * params.B * std::pow(r, d + 1.0));
        if (!(m0 > 0.0) || P0 < 0.0)
            throw ConstructionError("mass shape not admissible at r = " + std::to_string(r), r);
        const double energy = compliant_energy(d, params.C0, m0);
        double radicand = 2.0 * (energy - m0 * newtonian(r, unit) - 0.5 * r2);
        if (radicand < -1e-12 * std::max(1.0, std::abs(energy)))
            throw ConstructionError("radicand negative at r = " + std::to_string(r), r);
        mass[i] = m0;
        density[i] = P0;
        velocity[i] = params.sign * std::sqrt(std::max(radicand, 0.0));
    }
    auto g1 = grid, g2 = grid;
    InitialData data = InitialData::with_mass(
        d, RadialProfile(std::move(g1), std::move(density)),
        RadialProfile(std::move(g2), std::move(velocity)),
        RadialProfile(std::move(grid), std::move(mass)));

    const ConditionReport report = classify(data);
    if (report.verdict == Verdict::Inconsistent ||
        report.verdict == Verdict::InconsistentWithGlobal)
        throw ConstructionError("compliant construction failed validation: " + report.detail,
                                R0);
    return data;
}

double compliant_shape_limit(int d, double R0, double C0, double A) {
    const PotentialSpec unit(d, 1.0);
    auto grid = log_grid(R0, 1024);
    auto min_radicand = [&](double B) {
        double worst = std::numeric_limits<double>::infinity();
        for (double r : grid) {
            const double m0 = A * std::pow(r, static_cast<double>(d)) * (1.0 + B * r * r);
            if (!(m0 > 0.0)) return -1.0;
            const double energy = compliant_energy(d, C0, m0);
            const double radicand =
                2.0 * (energy - m0 * newtonian(r, unit) - 0.5 * r * r);
            worst = std::min(worst, radicand);
        }
        return worst;
    };
    if (min_radicand(0.0) < 0.0)
        throw std::invalid_argument("no admissible shape: radicand negative already at B = 0");
    double hi = 1.0;
    int guard = 0;
    while (min_radicand(hi) >= 0.0) {
        hi *= 2.0;
        if (++guard > 60) return hi;
    }
    double lo = hi > 1.0 ? hi / 2.0 : 0.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (min_radicand(mid) >= 0.0 ? lo : hi) = mid;
    }
    return lo;
}

}  // namespace radialep
