#include "radialep/potential.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace radialep {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_positive_radius(double r) {
    if (!(r > 0.0)) throw std::domain_error("radius must be positive, got " + std::to_string(r));
}
}  // namespace

PotentialSpec::PotentialSpec(int dim, double mass) : d(dim), m(mass) {
    if (d < 2) throw std::invalid_argument("dimension must be an integer >= 2");
    if (!(m > 0.0)) throw std::invalid_argument("mass must be positive");
}

double surface_area(int d) {
    return 2.0 * std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d);
}

double newton_coeff(int d) { return 1.0 / surface_area(d); }

double force_coeff(int d) {
    return d == 2 ? 1.0 / kTwoPi : newton_coeff(d) * (d - 2);
}

double newtonian(double r, const PotentialSpec& spec) {
    require_positive_radius(r);
    if (spec.d == 2) return -std::log(r) / kTwoPi;
    return newton_coeff(spec.d) * std::pow(r, 2.0 - spec.d);
}

double newtonian_d1(double r, const PotentialSpec& spec) {
    require_positive_radius(r);
    return -force_coeff(spec.d) * std::pow(r, 1.0 - spec.d);
}

double newtonian_d2(double r, const PotentialSpec& spec) {
    require_positive_radius(r);
    return force_coeff(spec.d) * (spec.d - 1) * std::pow(r, -static_cast<double>(spec.d));
}

double equilibrium_radius(const PotentialSpec& spec) {
    return std::pow(spec.m * force_coeff(spec.d), 1.0 / spec.d);
}

double e_min(const PotentialSpec& spec) {
    double rs = equilibrium_radius(spec);
    return spec.m * newtonian(rs, spec) + 0.5 * rs * rs;
}

double tau_d(int d) {
    if (d < 2) throw std::invalid_argument("dimension must be an integer >= 2");
    return kTwoPi / std::sqrt(static_cast<double>(d));
}

double normalize_energy(double E, const PotentialSpec& spec) {
    double floor = e_min(spec);
    if (E < floor - 1e-12 * std::max(1.0, std::abs(floor)))
        throw std::domain_error("energy below the minimum of the well");
    if (spec.d == 2) return E / spec.m + std::log(spec.m) / (2.0 * kTwoPi);
    return std::pow(spec.m, -2.0 / spec.d) * E;
}

EffectivePotential::EffectivePotential(PotentialSpec spec)
    : spec_(spec),
      c_(force_coeff(spec.d)),
      r_star_(equilibrium_radius(spec)),
      e_min_(radialep::e_min(spec)) {}

double EffectivePotential::value(double r) const {
    require_positive_radius(r);
    return spec_.m * newtonian(r, spec_) + 0.5 * r * r;
}

double EffectivePotential::deriv(double r) const {
    require_positive_radius(r);
    return -spec_.m * c_ * std::pow(r, 1.0 - spec_.d) + r;
}

double EffectivePotential::deriv2(double r) const {
    require_positive_radius(r);
    return spec_.m * c_ * (spec_.d - 1) * std::pow(r, -static_cast<double>(spec_.d)) + 1.0;
}

NormalizedPotential::NormalizedPotential(int d) : d_(d) {
    if (d < 2) throw std::invalid_argument("dimension must be an integer >= 2");
}

double NormalizedPotential::value(double x) const {
    require_positive_radius(x);
    double repulsion = d_ == 2 ? -std::log(x) : (std::pow(x, 2.0 - d_) - 1.0) / (d_ - 2);
    return repulsion + 0.5 * (x * x - 1.0);
}

double NormalizedPotential::deriv(double x) const {
    require_positive_radius(x);
    return -std::pow(x, 1.0 - d_) + x;
}

double NormalizedPotential::deriv2(double x) const {
    require_positive_radius(x);
    return (d_ - 1) * std::pow(x, -static_cast<double>(d_)) + 1.0;
}

}  // namespace radialep
