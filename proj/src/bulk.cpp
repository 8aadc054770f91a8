#include "radialep/bulk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "radialep/characteristics.hpp"
#include "radialep/errors.hpp"
#include "radialep/potential.hpp"

namespace radialep {

namespace {

struct LabelRun {
    Trajectory traj;
    std::vector<double> P;  // aligned with traj.t
    std::vector<double> w;
    std::optional<double> blowup;
};

}  // namespace

std::vector<double> bulk_frames(int d, double t_end) {
    const double dt = tau_d(d) / 100.0;
    std::vector<double> frames;
    const auto n = static_cast<std::size_t>(std::floor(t_end / dt + 1e-9));
    frames.reserve(n + 2);
    for (std::size_t i = 0; i <= n; ++i) frames.push_back(i * dt);
    if (frames.back() < t_end) frames.push_back(t_end);
    return frames;
}

BulkSolution evolve(const InitialData& data, std::span<const double> t_grid,
                    const BulkOptions& opts) {
    if (t_grid.empty() || t_grid.front() != 0.0)
        throw std::invalid_argument("evolve: output frames must start at t = 0");
    if (opts.label_count < 2) throw std::invalid_argument("evolve: need at least two labels");

    const int d = data.dim();
    const ConditionReport report = classify(data);
    if (report.verdict == Verdict::Inconsistent)
        throw InconsistentDataError("evolve: structurally inconsistent data: " + report.detail);
    const bool closed_form = report.verdict != Verdict::InconsistentWithGlobal;

    BulkSolution sol;
    sol.d = d;
    sol.closed_form_pw = closed_form;
    sol.labels = log_grid(data.outer_radius(), opts.label_count);
    sol.mass.reserve(sol.labels.size());

    std::vector<LabelRun> runs;
    runs.reserve(sol.labels.size());
    for (std::size_t j = 0; j < sol.labels.size(); ++j) {
        const double r0 = sol.labels[j];
        CharacteristicState s0{r0, data.u0_at(r0), data.p0_at(r0),
                               data.u0().derivative(r0), data.m0_at(r0), 0.0};
        sol.mass.push_back(s0.m);
        LabelRun run;
        if (closed_form) {
            run.traj = integrate_orbit_at(s0, d, t_grid, opts.tol);
            const double theta = theta_at(r0, data);
            const double p0dm = s0.P / (d * s0.m);
            const double f0 = theta * s0.u + p0dm * s0.r;
            if (std::abs(f0 - 1.0) > 1e-6)
                throw InconsistentDataError("evolve: f(0) deviates from 1 at a label");
            run.P.reserve(run.traj.size());
            run.w.reserve(run.traj.size());
            const double mc = s0.m * force_coeff(d);
            for (std::size_t i = 0; i < run.traj.size(); ++i) {
                const double f = theta * run.traj.u[i] + p0dm * run.traj.r[i];
                if (f <= 0.0 && !run.blowup) {
                    run.blowup = first_f_root(s0, d, theta, p0dm, run.traj.t[i], opts.tol)
                                     .value_or(run.traj.t[i]);
                    break;
                }
                const double uprime = mc * std::pow(run.traj.r[i], 1.0 - d) - run.traj.r[i];
                run.P.push_back(s0.P / f);
                run.w.push_back((theta * uprime + p0dm * run.traj.u[i]) / f);
            }
        } else {
            run.traj = integrate_pw_at(s0, d, t_grid, opts.tol);
            run.blowup = run.traj.blowup_time;
            run.P = run.traj.P;
            run.w = run.traj.w;
        }
        runs.push_back(std::move(run));
    }

    // Earliest per-label blow-up bounds the classical window.
    std::optional<double> blowup;
    for (const auto& run : runs)
        if (run.blowup && (!blowup || *run.blowup < *blowup)) blowup = *run.blowup;

    const std::size_t n_labels = sol.labels.size();
    for (std::size_t frame = 0; frame < t_grid.size(); ++frame) {
        const double t = t_grid[frame];
        if (blowup && t >= *blowup) {
            sol.status = BulkStatus::BlowUp;
            sol.event_time = blowup;
            return sol;
        }
        std::vector<double> r_row(n_labels), u_row(n_labels), P_row(n_labels), w_row(n_labels);
        for (std::size_t j = 0; j < n_labels; ++j) {
            const auto& run = runs[j];
            if (frame >= run.traj.size() || frame >= run.P.size()) {
                sol.status = BulkStatus::BlowUp;
                sol.event_time = blowup ? blowup : std::optional<double>(t);
                return sol;
            }
            r_row[j] = run.traj.r[frame];
            u_row[j] = run.traj.u[frame];
            P_row[j] = run.P[frame];
            w_row[j] = run.w[frame];
        }
        // Discrete proxy of dPhi/dr > 0: label order must be preserved.
        for (std::size_t j = 0; j + 1 < n_labels; ++j) {
            if (!(r_row[j] < r_row[j + 1])) {
                sol.status = BulkStatus::ClassicalBreakdown;
                sol.event_time = t;
                return sol;
            }
        }
        sol.t.push_back(t);
        sol.r.push_back(std::move(r_row));
        sol.u.push_back(std::move(u_row));
        sol.P.push_back(std::move(P_row));
        sol.w.push_back(std::move(w_row));
    }
    sol.status = BulkStatus::Completed;
    return sol;
}

namespace {

std::size_t frame_index(const BulkSolution& sol, double t) {
    if (sol.t.empty()) throw std::invalid_argument("empty bulk solution");
    const double span = std::max(sol.t.back() - sol.t.front(), 1.0);
    for (std::size_t i = 0; i < sol.t.size(); ++i)
        if (std::abs(sol.t[i] - t) <= 1e-9 * span) return i;
    throw std::invalid_argument("time " + std::to_string(t) + " is not a stored frame");
}

}  // namespace

FieldSample fields(const BulkSolution& sol, double t, double r) {
    const std::size_t frame = frame_index(sol, t);
    const auto& pos = sol.r[frame];
    FieldSample out;
    if (!(r > 0.0)) throw std::domain_error("fields: radius must be positive");
    if (r > pos.back()) {
        out.outside = true;
        return out;  // zero density outside the support, flagged
    }

    double P, u;
    if (r < pos.front()) {
        // Inside the innermost label: power-law density, linear velocity.
        P = sol.P[frame].front() * std::pow(r / pos.front(), sol.d - 1.0);
        u = sol.u[frame].front() * r / pos.front();
    } else {
        const RadialProfile Pr(std::vector<double>(pos.begin(), pos.end()),
                               std::vector<double>(sol.P[frame].begin(), sol.P[frame].end()));
        const RadialProfile ur(std::vector<double>(pos.begin(), pos.end()),
                               std::vector<double>(sol.u[frame].begin(), sol.u[frame].end()));
        P = Pr(r);
        u = ur(r);
    }
    out.P = P;
    out.u = u;
    out.rho = P / (surface_area(sol.d) * std::pow(r, sol.d - 1.0));
    return out;
}

std::vector<double> continuation_monitor(const BulkSolution& sol) {
    std::vector<double> monitor;
    monitor.reserve(sol.frames());
    for (std::size_t frame = 0; frame < sol.frames(); ++frame) {
        double sup_density = 0.0, sup_shear = 0.0;
        for (std::size_t j = 0; j < sol.labels.size(); ++j) {
            sup_density = std::max(
                sup_density, std::pow(sol.r[frame][j], 1.0 - sol.d) * sol.P[frame][j]);
            sup_shear = std::max(sup_shear, std::abs(sol.w[frame][j]));
        }
        monitor.push_back(sup_density + sup_shear);
    }
    return monitor;
}

}  // namespace radialep
