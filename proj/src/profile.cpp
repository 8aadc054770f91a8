#include "radialep/profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace radialep {

namespace {

int sign(double x) { return (x > 0) - (x < 0); }

// One-sided slope at the boundary (3-point formula with the Fritsch-Carlson
// monotonicity clamp).
double edge_slope(double h0, double h1, double d0, double d1) {
    double m = ((2 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (sign(m) != sign(d0))
        m = 0.0;
    else if (sign(d0) != sign(d1) && std::abs(m) > 3 * std::abs(d0))
        m = 3 * d0;
    return m;
}

// 5-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr double kGx[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                           0.5384693101056831, 0.9061798459386640};
constexpr double kGw[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                           0.4786286704993665, 0.2369268850561891};

}  // namespace

RadialProfile::RadialProfile(std::vector<double> grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    const std::size_t n = grid_.size();
    if (n != values_.size()) throw std::invalid_argument("profile: grid/value size mismatch");
    if (n < 2) throw std::invalid_argument("profile: need at least two nodes");
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!(grid_[i] < grid_[i + 1]))
            throw std::invalid_argument("profile: grid must be strictly increasing");

    slopes_.resize(n);
    if (n == 2) {
        slopes_[0] = slopes_[1] = (values_[1] - values_[0]) / (grid_[1] - grid_[0]);
        return;
    }
    std::vector<double> h(n - 1), delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = grid_[i + 1] - grid_[i];
        delta[i] = (values_[i + 1] - values_[i]) / h[i];
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (delta[i - 1] == 0.0 || delta[i] == 0.0 || sign(delta[i - 1]) != sign(delta[i])) {
            slopes_[i] = 0.0;
        } else {
            // Brodlie weighted harmonic mean: keeps the interpolant monotone.
            double w1 = 2 * h[i] + h[i - 1];
            double w2 = h[i] + 2 * h[i - 1];
            slopes_[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
    slopes_[0] = edge_slope(h[0], h[1], delta[0], delta[1]);
    slopes_[n - 1] = edge_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
}

std::size_t RadialProfile::segment(double r) const {
    if (r <= grid_.front()) return 0;
    if (r >= grid_.back()) return grid_.size() - 2;
    auto it = std::upper_bound(grid_.begin(), grid_.end(), r);
    return static_cast<std::size_t>(it - grid_.begin()) - 1;
}

double RadialProfile::operator()(double r) const {
    if (r < grid_.front()) return values_.front() + slopes_.front() * (r - grid_.front());
    if (r > grid_.back()) return values_.back() + slopes_.back() * (r - grid_.back());
    const std::size_t i = segment(r);
    const double h = grid_[i + 1] - grid_[i];
    const double t = (r - grid_[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    return values_[i] * (2 * t3 - 3 * t2 + 1) + h * slopes_[i] * (t3 - 2 * t2 + t) +
           values_[i + 1] * (-2 * t3 + 3 * t2) + h * slopes_[i + 1] * (t3 - t2);
}

double RadialProfile::derivative(double r) const {
    if (r < grid_.front()) return slopes_.front();
    if (r > grid_.back()) return slopes_.back();
    const std::size_t i = segment(r);
    const double h = grid_[i + 1] - grid_[i];
    const double t = (r - grid_[i]) / h;
    const double t2 = t * t;
    return (values_[i] * (6 * t2 - 6 * t) + h * slopes_[i] * (3 * t2 - 4 * t + 1) +
            values_[i + 1] * (-6 * t2 + 6 * t) + h * slopes_[i + 1] * (3 * t2 - 2 * t)) /
           h;
}

double RadialProfile::integrate(double a, double b) const {
    if (!(a <= b)) throw std::invalid_argument("profile integrate: a > b");
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < grid_.size(); ++i) {
        const double lo = std::max(a, grid_[i]);
        const double hi = std::min(b, grid_[i + 1]);
        if (lo >= hi) continue;
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        double acc = 0.0;
        for (int k = 0; k < 5; ++k) acc += kGw[k] * (*this)(mid + half * kGx[k]);
        total += half * acc;
    }
    return total;
}

std::vector<double> log_grid(double r_max, int n, double span_frac) {
    if (!(r_max > 0) || n < 2 || !(span_frac > 0) || !(span_frac < 1))
        throw std::invalid_argument("log_grid: bad parameters");
    std::vector<double> g(n);
    const double lo = std::log(r_max * span_frac), hi = std::log(r_max);
    for (int i = 0; i < n; ++i) g[i] = std::exp(lo + (hi - lo) * i / (n - 1.0));
    g.back() = r_max;
    return g;
}

}  // namespace radialep
