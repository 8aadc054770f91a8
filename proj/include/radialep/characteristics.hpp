#ifndef RADIALEP_CHARACTERISTICS_HPP
#define RADIALEP_CHARACTERISTICS_HPP

#include <optional>
#include <span>
#include <vector>

namespace radialep {

/// State carried along one characteristic: radius, radial velocity, the
/// radial density factor P, w = du/dr, and the frozen enclosed mass.
struct CharacteristicState {
    double r;
    double u;
    double P = 0.0;
    double w = 0.0;
    double m = 1.0;
    double t = 0.0;
};

/// |w| or P beyond this value counts as blow-up for the (P, w) integration.
inline constexpr double kBlowupThreshold = 1e12;

struct Trajectory {
    std::vector<double> t;
    std::vector<double> r;
    std::vector<double> u;
    std::vector<double> P;  // empty unless the (P, w) pair was integrated
    std::vector<double> w;
    int d = 0;
    double m = 1.0;
    std::optional<double> blowup_time;
    std::vector<double> apocenter_times;  // u sign changes + -> -
    double max_energy_drift = 0.0;        // relative to |E(0) - e_min|

    bool has_pw() const { return !P.empty(); }
    std::size_t size() const { return t.size(); }
};

/// Conserved particle energy u^2/2 + m N(r) + r^2/2.
double particle_energy(const CharacteristicState& s, int d);

/// Integrate the closed (r, u) system r' = u, u' = -m dN/dr - r with an
/// adaptive embedded pair and dense output.  States are sampled every
/// dt_out (default tau_d/200); apocenter passages are located by bisection
/// on the dense output.
Trajectory integrate_orbit(const CharacteristicState& s0, int d, double t_end,
                           double tol = 1e-10, double dt_out = -1.0);

/// Same integration sampled at caller-given times (ascending, >= 0).
Trajectory integrate_orbit_at(const CharacteristicState& s0, int d,
                              std::span<const double> times, double tol = 1e-10);

/// Fixed-step velocity-Verlet integration of the same system: the symplectic
/// cross-check for long-time energy behavior.
Trajectory integrate_orbit_leapfrog(const CharacteristicState& s0, int d, double t_end,
                                    double dt);

/// Integrate the coupled (r, u, P, w) system.  Raises a blow-up event (time
/// refined by bisection) once |w| or P crosses kBlowupThreshold and truncates
/// the stored samples there.
Trajectory integrate_pw(const CharacteristicState& s0, int d, double t_end,
                        double tol = 1e-10, double dt_out = -1.0);
Trajectory integrate_pw_at(const CharacteristicState& s0, int d,
                           std::span<const double> times, double tol = 1e-10);

/// The closed-form solution of the (P, w) pair along an orbit:
///     f(t) = theta u(t) + p0_over_dm r(t),  P(t) = P(0)/f(t),  w = f'/f,
/// with the analytic f' = theta u' + p0_over_dm u.  Requires f(0) = 1 within
/// 1e-6 (anything else signals data violating the consistency identity).
struct ClosedFormPw {
    std::vector<double> f;
    std::vector<double> w;
};
ClosedFormPw f_closed_form(const Trajectory& orbit, double theta, double p0_over_dm);

/// Orbit period measured from the flow: time between the first two
/// apocenter passages.
double measured_period(const CharacteristicState& s0, int d, double tol = 1e-10);

/// First time the radii of two characteristics coincide, scanned at
/// tau_d/200 resolution and refined by bisection; nullopt if none is found
/// before t_max (an inconclusive outcome, not a proof of no crossing).
std::optional<double> first_crossing(const CharacteristicState& a,
                                     const CharacteristicState& b, int d, double t_max,
                                     double tol = 1e-10);

/// Minimum of f(t) = theta u(t) + p0_over_dm r(t) over one period of the
/// orbit through s0, refined on the dense samples.
double min_f_over_period(const CharacteristicState& s0, int d, double theta,
                         double p0_over_dm, double T, double tol = 1e-10);

/// First root of the closed-form f along the orbit within [0, t_end], if any.
std::optional<double> first_f_root(const CharacteristicState& s0, int d, double theta,
                                   double p0_over_dm, double t_end, double tol = 1e-10);

}  // namespace radialep

#endif
