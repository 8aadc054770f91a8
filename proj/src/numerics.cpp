#include "radialep/numerics.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "radialep/errors.hpp"

namespace radialep::num {

double deriv1(const std::function<double(double)>& f, double x, double h) {
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

double deriv2(const std::function<double(double)>& f, double x, double h) {
    return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) /
           (12 * h * h);
}

double deriv3(const std::function<double(double)>& f, double x, double h) {
    return (-f(x - 3 * h) + 8 * f(x - 2 * h) - 13 * f(x - h) + 13 * f(x + h) -
            8 * f(x + 2 * h) + f(x + 3 * h)) /
           (8 * h * h * h);
}

double deriv4(const std::function<double(double)>& f, double x, double h) {
    return (-f(x - 3 * h) + 12 * f(x - 2 * h) - 39 * f(x - h) + 56 * f(x) -
            39 * f(x + h) + 12 * f(x + 2 * h) - f(x + 3 * h)) /
           (6 * h * h * h * h);
}

double central_diff(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2 * h);
}

double bracket_root(const std::function<double(double)>& f, double a, double b) {
    if (!(a < b)) throw std::invalid_argument("bracket_root: empty bracket");
    double fa = f(a), fb = f(b);
    if (fa == 0) return a;
    if (fb == 0) return b;
    if ((fa < 0) == (fb < 0))
        throw std::invalid_argument("bracket_root: endpoints do not bracket a root");
    boost::uintmax_t max_iter = 200;
    auto r = boost::math::tools::toms748_solve(
        f, a, b, fa, fb, boost::math::tools::eps_tolerance<double>(), max_iter);
    return 0.5 * (r.first + r.second);
}

double golden_min(const std::function<double(double)>& f, double a, double b, double tol) {
    constexpr double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol * (1.0 + std::abs(a) + std::abs(b))) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_floor) {
    double error = 0, l1 = 0;
    double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        f, a, b, /*max_depth=*/12, rel_tol, &error, &l1);
    if (error > rel_tol * std::max(std::abs(value), 1e-300) && error > abs_floor)
        throw QuadratureError("quadrature tolerance not reached", value, error);
    return value;
}

}  // namespace radialep::num
