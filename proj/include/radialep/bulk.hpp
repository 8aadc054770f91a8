#ifndef RADIALEP_BULK_HPP
#define RADIALEP_BULK_HPP

#include <optional>
#include <span>
#include <vector>

#include "radialep/initial_data.hpp"

namespace radialep {

enum class BulkStatus {
    Completed,
    ClassicalBreakdown,  // label ordering inverted: characteristics crossed
    BlowUp,              // f reached zero / (P, w) escaped along a label
};

struct BulkOptions {
    int label_count = 256;
    double tol = 1e-10;
    /// When true the (P, w) pair per label comes from the closed form; when
    /// false (data violating the level condition) it is integrated as an ODE.
    /// Chosen automatically by evolve.
};

/// Lagrangian evolution: one characteristic per label, Eulerian fields as
/// derived views over the flow positions.
struct BulkSolution {
    int d = 0;
    BulkStatus status = BulkStatus::Completed;
    std::optional<double> event_time;  // breakdown or blow-up time
    bool closed_form_pw = true;

    std::vector<double> labels;     // initial radii r_j
    std::vector<double> mass;       // frozen m0(r_j)
    std::vector<double> t;          // stored frames
    // Frame-major storage: state[frame][label].
    std::vector<std::vector<double>> r, u, P, w;

    std::size_t frames() const { return t.size(); }
    double boundary(std::size_t frame) const { return r[frame].back(); }
};

/// Integrate label_count characteristics over the given output frames
/// (ascending, starting at 0).  Stops at the first label crossing (discrete
/// order inversion) or blow-up and records the event.
BulkSolution evolve(const InitialData& data, std::span<const double> t_grid,
                    const BulkOptions& opts = {});

struct FieldSample {
    double P = 0.0;
    double u = 0.0;
    double rho = 0.0;
    bool outside = false;  // r beyond the free boundary R(t)
};

/// Eulerian fields at a stored frame by monotone interpolation over the
/// label positions; rho = P / (|S^{d-1}| r^{d-1}).
FieldSample fields(const BulkSolution& sol, double t, double r);

/// sup_j r^{1-d} P + sup_j |w| per stored frame: the continuation-criterion
/// quantity whose boundedness is equivalent to classical existence.
std::vector<double> continuation_monitor(const BulkSolution& sol);

/// Uniform output frames 0..t_end step tau_d(d)/100 (the default cadence).
std::vector<double> bulk_frames(int d, double t_end);

}  // namespace radialep

#endif
