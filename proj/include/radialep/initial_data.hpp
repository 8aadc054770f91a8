#ifndef RADIALEP_INITIAL_DATA_HPP
#define RADIALEP_INITIAL_DATA_HPP

#include <optional>
#include <string>

#include "radialep/profile.hpp"

namespace radialep {

/// Consistent triple (P0, u0, R0) on a shared grid plus the enclosed-mass
/// profile.  Construction validates the consistency proxies: P0 >= 0,
/// r^{1-d} P0 positive at the innermost node, |u0| linear toward the origin,
/// m0 positive and increasing.
class InitialData {
public:
    /// m0 computed by integrating the P0 interpolant (power-law extension
    /// below the first node).
    static InitialData from_profiles(int d, RadialProfile P0, RadialProfile u0);

    /// Generators with an exact cumulative mass supply it directly.
    static InitialData with_mass(int d, RadialProfile P0, RadialProfile u0,
                                 RadialProfile m0);

    int dim() const { return d_; }
    double outer_radius() const { return R0_; }
    const RadialProfile& P0() const { return P0_; }
    const RadialProfile& u0() const { return u0_; }
    const RadialProfile& m0() const { return m0_; }

    /// Evaluations with the documented near-origin conventions: P0 follows
    /// the power law (r/r_first)^{d-1} P0(r_first) below the grid, u0 drops
    /// linearly to zero at r = 0.
    double p0_at(double r) const;
    double u0_at(double r) const;
    double m0_at(double r) const;

private:
    InitialData() = default;

    int d_ = 0;
    double R0_ = 0;
    RadialProfile P0_, u0_, m0_;
};

/// Cumulative mass of a density factor profile: m0(r) = int_0^r P0.
/// Negative nodes raise InconsistentDataError.
RadialProfile derive_mass(const RadialProfile& P0, int d);

/// E0(r) = u0^2/2 + m0 N(r) + r^2/2 at the grid nodes.
RadialProfile energy_profile(const InitialData& data);

/// Normalized level c0(r) = m0^{-2/d} E0 (d >= 3) or E0/m0 + ln(m0)/(4 pi)
/// (d = 2).  Constancy of this profile is the first global-existence
/// condition.
RadialProfile c0_profile(const InitialData& data);

/// Per-characteristic constant theta from node values.  The first branch
/// divides by u0, the second by m0 V_eff'(r); the consistency identity makes
/// them equal where both denominators are alive.
double theta_from_values(int d, double r, double P0, double u0, double du0, double m0,
                         double u0_scale);

/// theta evaluated at an arbitrary radius through the interpolants.
double theta_at(double r, const InitialData& data);

/// theta at every grid node, cross-checking the two branches where both are
/// defined.  Requires non-stationary data passing the level condition.
RadialProfile theta_profile(const InitialData& data);

/// min over the energy level set K_r of theta(r) u + (P0/(d m0)) r~: the
/// quantity whose positivity at every node is the second global-existence
/// condition.
double levelset_min_f(double r, const InitialData& data);

enum class Verdict {
    Stationary,
    GlobalSmooth,
    FiniteTimeBlowup,
    InconsistentWithGlobal,  // level condition fails: no global smooth solution
    Inconsistent,            // structurally broken data
};

std::string to_string(Verdict v);

struct ClassifyTolerances {
    double c0_rel_spread = 1e-6;    // level-condition constancy
    double stationary_band = 1e-8;  // |C0 - C_min| relative band
    double marginal_band = 1e-9;    // |min f| below this is flagged marginal
};

struct ConditionReport {
    Verdict verdict = Verdict::Inconsistent;
    double C0_mean = 0.0;
    double C0_max_deviation = 0.0;  // relative spread of the c0 profile
    double min_levelset_f = 0.0;
    std::optional<double> offending_radius;
    double C_min = 0.0;  // min of N + r^2/2, the stationary level
    bool marginal = false;
    std::string detail;
};

/// The full two-condition classification.
ConditionReport classify(const InitialData& data, const ClassifyTolerances& tol = {});

/// Zero-velocity force-balanced family: m0 solves m c r^{1-d} = r per node.
InitialData make_stationary(int d, double R0, int nodes = 512);

struct CompliantParams {
    double C0;             // shared normalized level, > C_min
    double A;              // mass amplitude: m0 = A r^d (1 + B r^2)
    double B = 0.0;        // mass-shape perturbation
    double sign = 1.0;     // sign of u0
    int nodes = 512;
    double span_frac = 1e-4;
};

/// Data built by inverting the level condition: u0 = sign * sqrt(radicand)
/// with radicand = 2 (E0(C0, m0) - m0 N - r^2/2).  A negative radicand
/// anywhere raises ConstructionError carrying the first failing radius.
InitialData make_compliant(int d, double R0, const CompliantParams& params);

/// Largest shape parameter B for which the compliant radicand stays
/// nonnegative on (0, R0] at the given C0 and A (bisection scan): data built
/// close to this edge carries a large theta and blows up.
double compliant_shape_limit(int d, double R0, double C0, double A);

}  // namespace radialep

#endif
