#pragma once

#include <complex>

#include "vosa/mode_engine.hpp"
#include "vosa/quadrature.hpp"
#include "vosa/test_function.hpp"

namespace vosa {

// Vacuum two-point data: quasi-primary states a, b of one model and circle
// test functions supported away from -1.
struct TwoPointSetup {
    StateVector a;
    StateVector b;
    TestFunction f;
    TestFunction g;
    double quad_tol = 1e-12;
};

// Cayley transform angle <-> real line: x = 2 tan(theta/2).
double cayley_angle_to_real(double theta);
double cayley_real_to_angle(double x);

// Pullback f^R(x) = (1+x^2/4)^{d-1} f(C^{-1}(x)).
std::complex<double> cayley_pullback(const TestFunction& f, HalfInt d, double x);

// Holomorphic real-line Fourier transform of the pullback,
// (2 pi)^{-1/2} int f^R(x) e^{-i zeta x} dx, entire in zeta.
std::complex<double> real_line_ft(const TestFunction& f, HalfInt d, std::complex<double> zeta,
                                  double tol = 1e-12);

// Reflection f o j, j(z) = 1/z: coefficients reverse.
TestFunction reflect(const TestFunction& f);

// (Y(a,f)0 | Y(b,g)0) as the binomial mode series over the bands, with a
// certificate-driven tail bound.
std::complex<double> two_point_series(EvalContext& ctx, const TwoPointSetup& s,
                                      double* tail_bound = nullptr);

// The same pairing as the half-line integral of the real-line transforms.
std::complex<double> two_point_integral(EvalContext& ctx, const TwoPointSetup& s,
                                        double* err_estimate = nullptr);

// F(z) = int_0^inf conj(v(p)) e^{-2 pi z d} u(e^{-2 pi z} p) p^{2d-1} dp
// times (a|b)/(2 pi (2d-1)!), where u, v are the real-line transforms of
// f o j and g o j. Analytic on the strip -1/2 < Im z < 0, continuous on its
// closure; supp f must sit in the upper semicircle. Throws std::domain_error
// for z outside the closed strip.
std::complex<double> bw_continuation(EvalContext& ctx, const TwoPointSetup& s,
                                     std::complex<double> z, double* err_estimate = nullptr);

}  // namespace vosa
