#ifndef RADIALEP_NUMERICS_HPP
#define RADIALEP_NUMERICS_HPP

#include <functional>

namespace radialep::num {

/// Central finite differences, fourth-order accurate stencils.
double deriv1(const std::function<double(double)>& f, double x, double h);
double deriv2(const std::function<double(double)>& f, double x, double h);
double deriv3(const std::function<double(double)>& f, double x, double h);
double deriv4(const std::function<double(double)>& f, double x, double h);

/// Second-order central difference (the classic gradient-check stencil).
double central_diff(const std::function<double(double)>& f, double x, double h);

/// Root of f on a bracketing interval [a, b] with f(a), f(b) of opposite
/// sign, refined to machine precision (TOMS 748).
double bracket_root(const std::function<double(double)>& f, double a, double b);

/// Golden-section minimization of a unimodal slice on [a, b].
double golden_min(const std::function<double(double)>& f, double a, double b,
                  double tol = 1e-12);

/// Adaptive Gauss-Kronrod integration of f over [a, b].  Throws
/// QuadratureError when the error estimate exceeds both rel_tol*|I| and
/// abs_floor.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_floor = 0.0);

}  // namespace radialep::num

#endif
