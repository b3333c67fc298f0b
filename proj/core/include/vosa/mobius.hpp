#pragma once

#include <complex>

#include "vosa/half_int.hpp"
#include "vosa/reports.hpp"
#include "vosa/rng.hpp"
#include "vosa/test_function.hpp"

namespace vosa {

// Element of the double cover of the Moebius group, stored as the SU(1,1)
// matrix [[alpha, beta], [conj beta, conj alpha]] with |alpha|^2-|beta|^2=1.
// The two lifts of a base transformation differ by an overall sign.
struct MobiusElement {
    std::complex<double> alpha{1.0, 0.0};
    std::complex<double> beta{0.0, 0.0};

    static MobiusElement rotation(double t);
    static MobiusElement dilation(double lambda);
    static MobiusElement translation(double t);
    // exp(time * (p + q cos x + r sin x) d/dx), Moebius vector fields only.
    static MobiusElement exp_field(double p, double q, double r, double time);

    MobiusElement inverse() const { return {std::conj(alpha), -beta}; }
    friend MobiusElement operator*(const MobiusElement& a, const MobiusElement& b);

    // Base action on the circle and on angles in (-pi, pi].
    std::complex<double> act(std::complex<double> z) const;
    double act_angle(double x) const;

    // X_gamma(z) = d(phi_gamma)/dx, strictly positive.
    double x_factor(double x) const;
    // W(x) = alpha e^{ix/2} + beta e^{-ix/2}; gamma(e^{ix}) = W / conj(W).
    std::complex<double> w(double x) const;
    // Y_gamma(e^{ix}) = e^{i(phi_gamma(x) - x)/2}.
    std::complex<double> y_factor(double x) const;
    // epsilon_gamma in {+-1}, the double-cover branch sign.
    double eps_factor(double x) const;
};

// beta_d (untwisted) / alpha_d (chi-twisted) action on a test function,
// re-expanded in its Fourier band.
TestFunction mobius_action(HalfInt d, const MobiusElement& g, const TestFunction& f);

// X- and Y-cocycle identities on sampled points.
CheckReport mobius_cocycle_check(const MobiusElement& g1, const MobiusElement& g2,
                                 int sample_points, double tol, const std::string& label = "");

// d/dt beta_d(exp(t f1)) f2 |_0 = (d-1) f1' f2 - f1 f2' by central
// differences; f1 = p + q cos + r sin.
CheckReport beta_derivative_check(HalfInt d, double p, double q, double r,
                                  const TestFunction& f2, int sample_points, double tol,
                                  double fd_step = 1e-4, const std::string& label = "");

// Seeded random Moebius element with moderate parameters.
MobiusElement random_mobius(Rng& rng);

}  // namespace vosa
