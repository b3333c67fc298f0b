#pragma once

#include <complex>
#include <functional>

namespace vosa {

using Cplx = std::complex<double>;

struct QuadResult {
    Cplx value{0.0, 0.0};
    double error = 0.0;  // accumulated error estimate
    bool converged = true;
};

// Adaptive Gauss-Kronrod 7-15 on a finite interval.
QuadResult integrate(const std::function<Cplx(double)>& f, double a, double b,
                     double abs_tol = 1e-12, double rel_tol = 1e-12, int max_depth = 48);

// Integral over [0, +infinity) of h(p) p^power with rapidly decaying h:
// [0,1] directly, then dyadic panels until they stop contributing.
QuadResult integrate_half_line(const std::function<Cplx(double)>& h, double power,
                               double abs_tol = 1e-12, double rel_tol = 1e-12);

}  // namespace vosa
