#include "radialep/characteristics.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "radialep/errors.hpp"
#include "radialep/numerics.hpp"
#include "radialep/period.hpp"
#include "radialep/potential.hpp"

namespace radialep {

namespace {

namespace ode = boost::numeric::odeint;

struct OrbitRhs {
    double mc;    // m * force_coeff(d)
    double expo;  // 1 - d
    void operator()(const std::array<double, 2>& x, std::array<double, 2>& dxdt,
                    double) const {
        dxdt[0] = x[1];
        dxdt[1] = mc * std::pow(x[0], expo) - x[0];
    }
};

struct PwRhs {
    double mc;    // m * force_coeff(d)
    double fc;    // force_coeff(d)
    double expo;  // 1 - d
    int d;
    void operator()(const std::array<double, 4>& x, std::array<double, 4>& dxdt,
                    double) const {
        const double r = x[0], u = x[1], P = x[2], w = x[3];
        const double rpow = std::pow(r, expo);  // r^{1-d}
        dxdt[0] = u;
        dxdt[1] = mc * rpow - r;
        dxdt[2] = -P * w;
        dxdt[3] = -w * w - mc * (d - 1) * rpow / r + fc * rpow * P - 1.0;
    }
};

template <std::size_t N>
bool finite(const std::array<double, N>& x) {
    for (double v : x)
        if (!std::isfinite(v)) return false;
    return true;
}

double bisect_time(const std::function<double(double)>& g, double a, double b) {
    double ga = g(a);
    for (int i = 0; i < 100 && b - a > 1e-15 * std::max(1.0, std::abs(b)); ++i) {
        const double mid = 0.5 * (a + b);
        const double gm = g(mid);
        if ((ga < 0) == (gm < 0)) {
            a = mid;
            ga = gm;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

// Shared dense-output driver.  on_interval is called once per accepted step
// with an evaluator for any time inside it; returning true stops early.
template <std::size_t N, class RHS, class OnInterval>
void integrate_dense(RHS rhs, std::array<double, N> x0, double t_end, double tol,
                     OnInterval&& on_interval) {
    auto stepper =
        ode::make_dense_output(0.01 * tol, tol, ode::runge_kutta_dopri5<std::array<double, N>>());
    stepper.initialize(x0, 0.0, std::min(0.01, 0.1 * std::max(t_end, 1e-6)));
    while (stepper.current_time() < t_end) {
        const auto interval = stepper.do_step(rhs);
        if (!finite(stepper.current_state()))
            throw IntegratorError("characteristic integration left the finite range");
        auto eval = [&](double t) {
            std::array<double, N> x;
            stepper.calc_state(t, x);
            return x;
        };
        if (on_interval(interval.first, std::min(interval.second, t_end), eval)) return;
    }
}

// Collects samples on a fixed time grid as the integration sweeps past.
template <std::size_t N>
class GridSampler {
public:
    GridSampler(std::span<const double> times, const std::array<double, N>& x0)
        : times_(times) {
        if (!times_.empty() && times_.front() <= 0.0) {
            record(x0);
            next_ = 1;
        }
    }

    template <class Eval>
    void sweep(double t_lo, double t_hi, Eval&& eval) {
        while (next_ < times_.size() && times_[next_] <= t_hi) {
            record(eval(std::max(times_[next_], t_lo)));
            ++next_;
        }
    }

    bool done() const { return next_ >= times_.size(); }
    const std::vector<std::array<double, N>>& samples() const { return samples_; }
    std::size_t count() const { return next_; }

private:
    void record(const std::array<double, N>& x) { samples_.push_back(x); }

    std::span<const double> times_;
    std::size_t next_ = 0;
    std::vector<std::array<double, N>> samples_;
};

std::vector<double> uniform_times(double t_end, double dt) {
    std::vector<double> times;
    const auto n = static_cast<std::size_t>(std::floor(t_end / dt + 1e-9));
    times.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) times.push_back(std::min(i * dt, t_end));
    if (times.back() < t_end) times.push_back(t_end);
    return times;
}

double default_dt(int d) { return tau_d(d) / 200.0; }

struct OrbitRun {
    std::vector<std::array<double, 2>> samples;
    std::size_t sample_count;
    std::vector<double> apocenters;
    double max_drift;
};

OrbitRun run_orbit(const CharacteristicState& s0, int d, std::span<const double> times,
                   double t_end, double tol, int stop_after_apocenters) {
    if (!(s0.r > 0.0)) throw std::domain_error("characteristic radius must be positive");
    if (!(s0.m > 0.0)) throw std::domain_error("characteristic mass must be positive");
    const OrbitRhs rhs{s0.m * force_coeff(d), 1.0 - d};
    const std::array<double, 2> x0{s0.r, s0.u};

    const double energy0 = particle_energy(s0, d);
    const double energy_scale =
        std::max(std::abs(energy0 - e_min(PotentialSpec(d, s0.m))),
                 1e-12 * std::max(1.0, std::abs(energy0)));
    auto drift_of = [&](const std::array<double, 2>& x) {
        return std::abs(particle_energy({x[0], x[1], 0, 0, s0.m}, d) - energy0) / energy_scale;
    };

    OrbitRun run{{}, 0, {}, 0.0};
    GridSampler<2> sampler(times, x0);
    double u_prev = s0.u;

    if (t_end > 0.0) {
        integrate_dense<2>(rhs, x0, t_end, tol, [&](double t_lo, double t_hi, auto&& eval) {
            sampler.sweep(t_lo, t_hi, eval);
            const auto x_hi = eval(t_hi);
            run.max_drift = std::max(run.max_drift, drift_of(x_hi));
            if (u_prev > 0.0 && x_hi[1] <= 0.0) {
                run.apocenters.push_back(
                    bisect_time([&](double t) { return eval(t)[1]; }, t_lo, t_hi));
                if (stop_after_apocenters > 0 &&
                    static_cast<int>(run.apocenters.size()) >= stop_after_apocenters)
                    return true;
            }
            u_prev = x_hi[1];
            return sampler.done() && times.size() > 0 && stop_after_apocenters == 0;
        });
    }
    run.samples = sampler.samples();
    run.sample_count = sampler.count();
    return run;
}

Trajectory orbit_trajectory(const CharacteristicState& s0, int d,
                            std::span<const double> times, const OrbitRun& run) {
    Trajectory traj;
    traj.d = d;
    traj.m = s0.m;
    traj.apocenter_times = run.apocenters;
    traj.max_energy_drift = run.max_drift;
    traj.t.assign(times.begin(), times.begin() + run.sample_count);
    traj.r.reserve(run.samples.size());
    traj.u.reserve(run.samples.size());
    for (const auto& x : run.samples) {
        traj.r.push_back(x[0]);
        traj.u.push_back(x[1]);
    }
    return traj;
}

}  // namespace

double particle_energy(const CharacteristicState& s, int d) {
    return 0.5 * s.u * s.u + s.m * newtonian(s.r, PotentialSpec(d, s.m)) + 0.5 * s.r * s.r;
}

Trajectory integrate_orbit(const CharacteristicState& s0, int d, double t_end, double tol,
                           double dt_out) {
    if (dt_out <= 0.0) dt_out = default_dt(d);
    const auto times = uniform_times(t_end, dt_out);
    return orbit_trajectory(s0, d, times, run_orbit(s0, d, times, t_end, tol, 0));
}

Trajectory integrate_orbit_at(const CharacteristicState& s0, int d,
                              std::span<const double> times, double tol) {
    if (times.empty()) throw std::invalid_argument("integrate_orbit_at: empty time grid");
    return orbit_trajectory(s0, d, times,
                            run_orbit(s0, d, times, times.back(), tol, 0));
}

Trajectory integrate_orbit_leapfrog(const CharacteristicState& s0, int d, double t_end,
                                    double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("leapfrog: dt must be positive");
    const double mc = s0.m * force_coeff(d);
    const double expo = 1.0 - d;
    auto accel = [&](double r) { return mc * std::pow(r, expo) - r; };

    Trajectory traj;
    traj.d = d;
    traj.m = s0.m;
    const auto n = static_cast<std::size_t>(std::ceil(t_end / dt));
    traj.t.reserve(n + 1);
    traj.r.reserve(n + 1);
    traj.u.reserve(n + 1);
    double r = s0.r, u = s0.u;
    traj.t.push_back(0.0);
    traj.r.push_back(r);
    traj.u.push_back(u);
    for (std::size_t i = 1; i <= n; ++i) {
        const double uh = u + 0.5 * dt * accel(r);
        r += dt * uh;
        if (!(r > 0.0) || !std::isfinite(r))
            throw IntegratorError("leapfrog step left the positive radius range");
        u = uh + 0.5 * dt * accel(r);
        traj.t.push_back(i * dt);
        traj.r.push_back(r);
        traj.u.push_back(u);
    }
    return traj;
}

namespace {

Trajectory run_pw(const CharacteristicState& s0, int d, std::span<const double> times,
                  double t_end, double tol) {
    if (!(s0.r > 0.0)) throw std::domain_error("characteristic radius must be positive");
    if (!(s0.m > 0.0)) throw std::domain_error("characteristic mass must be positive");
    if (s0.P < 0.0) throw std::domain_error("P must be nonnegative");
    const PwRhs rhs{s0.m * force_coeff(d), force_coeff(d), 1.0 - d, d};
    const std::array<double, 4> x0{s0.r, s0.u, s0.P, s0.w};

    GridSampler<4> sampler(times, x0);
    std::optional<double> blowup;
    auto magnitude = [](const std::array<double, 4>& x) {
        return std::max(std::abs(x[3]), x[2]);
    };

    if (t_end > 0.0 && magnitude(x0) < kBlowupThreshold) {
        integrate_dense<4>(rhs, x0, t_end, tol, [&](double t_lo, double t_hi, auto&& eval) {
            const auto x_hi = eval(t_hi);
            if (magnitude(x_hi) >= kBlowupThreshold) {
                const double t_event = bisect_time(
                    [&](double t) { return magnitude(eval(t)) - kBlowupThreshold; }, t_lo,
                    t_hi);
                sampler.sweep(t_lo, t_event, eval);
                blowup = t_event;
                return true;
            }
            sampler.sweep(t_lo, t_hi, eval);
            return sampler.done() && !times.empty();
        });
    }

    Trajectory traj;
    traj.d = d;
    traj.m = s0.m;
    traj.blowup_time = blowup;
    traj.t.assign(times.begin(), times.begin() + sampler.count());
    const auto& samples = sampler.samples();
    traj.r.reserve(samples.size());
    traj.u.reserve(samples.size());
    traj.P.reserve(samples.size());
    traj.w.reserve(samples.size());
    for (const auto& x : samples) {
        traj.r.push_back(x[0]);
        traj.u.push_back(x[1]);
        traj.P.push_back(x[2]);
        traj.w.push_back(x[3]);
    }
    return traj;
}

}  // namespace

Trajectory integrate_pw(const CharacteristicState& s0, int d, double t_end, double tol,
                        double dt_out) {
    if (dt_out <= 0.0) dt_out = default_dt(d);
    return run_pw(s0, d, uniform_times(t_end, dt_out), t_end, tol);
}

Trajectory integrate_pw_at(const CharacteristicState& s0, int d,
                           std::span<const double> times, double tol) {
    if (times.empty()) throw std::invalid_argument("integrate_pw_at: empty time grid");
    return run_pw(s0, d, times, times.back(), tol);
}

ClosedFormPw f_closed_form(const Trajectory& orbit, double theta, double p0_over_dm) {
    if (!std::isfinite(theta)) throw std::invalid_argument("theta must be finite");
    if (orbit.size() == 0) throw std::invalid_argument("empty trajectory");
    const double f0 = theta * orbit.u.front() + p0_over_dm * orbit.r.front();
    if (std::abs(f0 - 1.0) > 1e-6)
        throw InconsistentDataError(
            "f(0) = " + std::to_string(f0) +
            " deviates from 1: data violates the consistency identity");

    const double mc = orbit.m * force_coeff(orbit.d);
    const double expo = 1.0 - orbit.d;
    ClosedFormPw out;
    out.f.reserve(orbit.size());
    out.w.reserve(orbit.size());
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        const double f = theta * orbit.u[i] + p0_over_dm * orbit.r[i];
        const double uprime = mc * std::pow(orbit.r[i], expo) - orbit.r[i];
        const double fprime = theta * uprime + p0_over_dm * orbit.u[i];
        out.f.push_back(f);
        out.w.push_back(fprime / f);
    }
    return out;
}

double measured_period(const CharacteristicState& s0, int d, double tol) {
    const double floor = e_min(PotentialSpec(d, s0.m));
    if (particle_energy(s0, d) <= floor + kDegenerateEnergyBand)
        throw std::domain_error("measured_period requires a non-degenerate orbit");
    const double horizon = 10.0 * tau_d(d);
    const auto run = run_orbit(s0, d, {}, horizon, tol, 2);
    if (run.apocenters.size() < 2)
        throw IntegratorError("no second return to the section within 10 tau_d");
    return run.apocenters[1] - run.apocenters[0];
}

namespace {

// Cubic Hermite value on [t0, t1] from endpoint values and slopes.
double hermite(double t, double t0, double t1, double y0, double y1, double s0, double s1) {
    const double h = t1 - t0;
    const double x = (t - t0) / h;
    const double x2 = x * x, x3 = x2 * x;
    return y0 * (2 * x3 - 3 * x2 + 1) + h * s0 * (x3 - 2 * x2 + x) + y1 * (-2 * x3 + 3 * x2) +
           h * s1 * (x3 - x2);
}

}  // namespace

std::optional<double> first_crossing(const CharacteristicState& a,
                                     const CharacteristicState& b, int d, double t_max,
                                     double tol) {
    if (a.r == b.r) return 0.0;
    const double dt = default_dt(d);
    const auto times = uniform_times(t_max, dt);
    const Trajectory ta = integrate_orbit_at(a, d, times, tol);
    const Trajectory tb = integrate_orbit_at(b, d, times, tol);

    const std::size_t n = std::min(ta.size(), tb.size());
    for (std::size_t i = 1; i < n; ++i) {
        const double prev = ta.r[i - 1] - tb.r[i - 1];
        const double cur = ta.r[i] - tb.r[i];
        if (prev == 0.0) return times[i - 1];
        if ((prev < 0) != (cur < 0) || cur == 0.0) {
            auto diff = [&](double t) {
                const double ra = hermite(t, times[i - 1], times[i], ta.r[i - 1], ta.r[i],
                                          ta.u[i - 1], ta.u[i]);
                const double rb = hermite(t, times[i - 1], times[i], tb.r[i - 1], tb.r[i],
                                          tb.u[i - 1], tb.u[i]);
                return ra - rb;
            };
            return bisect_time(diff, times[i - 1], times[i]);
        }
    }
    return std::nullopt;
}

double min_f_over_period(const CharacteristicState& s0, int d, double theta,
                         double p0_over_dm, double T, double tol) {
    if (!(T > 0.0)) throw std::invalid_argument("period must be positive");
    const double dt = T / 400.0;
    const Trajectory orbit = integrate_orbit(s0, d, T + 2 * dt, tol, dt);

    const double mc = s0.m * force_coeff(d);
    const double expo = 1.0 - d;
    auto f_at = [&](std::size_t i) { return theta * orbit.u[i] + p0_over_dm * orbit.r[i]; };
    auto fprime_at = [&](std::size_t i) {
        const double uprime = mc * std::pow(orbit.r[i], expo) - orbit.r[i];
        return theta * uprime + p0_over_dm * orbit.u[i];
    };

    std::size_t best = 0;
    double best_val = f_at(0);
    for (std::size_t i = 1; i < orbit.size(); ++i) {
        const double v = f_at(i);
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }
    const std::size_t lo = best > 0 ? best - 1 : 0;
    const std::size_t hi = std::min(best + 1, orbit.size() - 1);
    if (lo == hi) return best_val;
    auto f_interp = [&](double t) {
        const std::size_t i = t <= orbit.t[best] ? lo : best;
        const std::size_t j = i + 1;
        return hermite(t, orbit.t[i], orbit.t[j], f_at(i), f_at(j), fprime_at(i), fprime_at(j));
    };
    const double t_min = num::golden_min(f_interp, orbit.t[lo], orbit.t[hi], 1e-13);
    return std::min(best_val, f_interp(t_min));
}

std::optional<double> first_f_root(const CharacteristicState& s0, int d, double theta,
                                   double p0_over_dm, double t_end, double tol) {
    const double dt = std::min(default_dt(d), t_end / 400.0);
    const Trajectory orbit = integrate_orbit(s0, d, t_end, tol, dt);
    const double mc = s0.m * force_coeff(d);
    const double expo = 1.0 - d;
    auto f_at = [&](std::size_t i) { return theta * orbit.u[i] + p0_over_dm * orbit.r[i]; };
    auto fprime_at = [&](std::size_t i) {
        const double uprime = mc * std::pow(orbit.r[i], expo) - orbit.r[i];
        return theta * uprime + p0_over_dm * orbit.u[i];
    };
    for (std::size_t i = 1; i < orbit.size(); ++i) {
        const double prev = f_at(i - 1), cur = f_at(i);
        if ((prev > 0) && (cur <= 0)) {
            auto g = [&](double t) {
                return hermite(t, orbit.t[i - 1], orbit.t[i], prev, cur, fprime_at(i - 1),
                               fprime_at(i));
            };
            return bisect_time(g, orbit.t[i - 1], orbit.t[i]);
        }
    }
    return std::nullopt;
}

}  // namespace radialep
