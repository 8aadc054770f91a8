#ifndef RADIALEP_PROFILE_HPP
#define RADIALEP_PROFILE_HPP

#include <span>
#include <vector>

namespace radialep {

/// Tabulated radial function on a strictly increasing grid with a C^1
/// monotonicity-preserving cubic Hermite interpolant (Fritsch-Carlson
/// slopes).  Evaluation outside the grid extrapolates linearly from the
/// nearest node; callers that need a different near-origin convention
/// (power-law density, velocity vanishing at r = 0) apply it themselves.
class RadialProfile {
public:
    RadialProfile() = default;
    RadialProfile(std::vector<double> grid, std::vector<double> values);

    double operator()(double r) const;
    double derivative(double r) const;

    std::span<const double> grid() const { return grid_; }
    std::span<const double> values() const { return values_; }
    std::size_t size() const { return grid_.size(); }
    double front_radius() const { return grid_.front(); }
    double back_radius() const { return grid_.back(); }

    /// Integral of the interpolant over [a, b] inside the grid span
    /// (5-point Gauss-Legendre per overlapped interval, exact for cubics).
    double integrate(double a, double b) const;

private:
    std::size_t segment(double r) const;

    std::vector<double> grid_;
    std::vector<double> values_;
    std::vector<double> slopes_;
};

/// Grid of n nodes log-spaced on (r_max * span_frac, r_max], endpoints
/// included: the default tabulation used throughout.
std::vector<double> log_grid(double r_max, int n, double span_frac = 1e-4);

}  // namespace radialep

#endif
