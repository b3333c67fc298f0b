#include "vosa/mobius.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace vosa {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
using Cd = std::complex<double>;
}  // namespace

MobiusElement MobiusElement::rotation(double t) {
    return {Cd(std::cos(t / 2), std::sin(t / 2)), Cd(0.0, 0.0)};
}

MobiusElement MobiusElement::dilation(double lambda) {
    return {Cd(std::cosh(lambda / 2), 0.0), Cd(-std::sinh(lambda / 2), 0.0)};
}

MobiusElement MobiusElement::translation(double t) {
    return {Cd(1.0, t / 4), Cd(0.0, t / 4)};
}

MobiusElement MobiusElement::exp_field(double p, double q, double r, double time) {
    // su(1,1) generator of (p + q cos + r sin) d/dx
    Cd h11(0.0, p / 2);
    Cd h12(-r / 2, q / 2);
    double mu2 = (q * q + r * r - p * p) / 4.0;  // -det
    double t = time;
    double c, s;  // exp(tH) = c I + s H
    if (mu2 > 1e-14) {
        double mu = std::sqrt(mu2);
        c = std::cosh(t * mu);
        s = std::sinh(t * mu) / mu;
    } else if (mu2 < -1e-14) {
        double om = std::sqrt(-mu2);
        c = std::cos(t * om);
        s = std::sin(t * om) / om;
    } else {
        c = 1.0;
        s = t;
    }
    return {Cd(c, 0.0) + s * h11, s * h12};
}

MobiusElement operator*(const MobiusElement& a, const MobiusElement& b) {
    // [[a1,b1],[cb1,ca1]] [[a2,b2],[cb2,ca2]]
    return {a.alpha * b.alpha + a.beta * std::conj(b.beta),
            a.alpha * b.beta + a.beta * std::conj(b.alpha)};
}

Cd MobiusElement::act(Cd z) const { return (alpha * z + beta) / (std::conj(beta) * z + std::conj(alpha)); }

double MobiusElement::act_angle(double x) const {
    Cd z = act(Cd(std::cos(x), std::sin(x)));
    return std::atan2(z.imag(), z.real());
}

double MobiusElement::x_factor(double x) const {
    Cd z(std::cos(x), std::sin(x));
    Cd denom = (std::conj(beta) * z + std::conj(alpha)) * (alpha * z + beta);
    Cd v = z / denom;
    return v.real();
}

Cd MobiusElement::w(double x) const {
    Cd e(std::cos(x / 2), std::sin(x / 2));
    return alpha * e + beta / e;
}

Cd MobiusElement::y_factor(double x) const {
    Cd ww = w(x);
    Cd phase = ww / std::abs(ww);
    return phase * Cd(std::cos(x / 2), -std::sin(x / 2));
}

double MobiusElement::eps_factor(double x) const {
    // epsilon = e^{i psi/2} / (W/|W|) with psi the principal angle of the
    // image point; the quotient is +-1 by construction.
    double psi = act_angle(x);
    Cd ww = w(x);
    Cd phase = ww / std::abs(ww);
    Cd eps = Cd(std::cos(psi / 2), std::sin(psi / 2)) / phase;
    return eps.real() >= 0.0 ? 1.0 : -1.0;
}

TestFunction mobius_action(HalfInt d, const MobiusElement& g, const TestFunction& f) {
    MobiusElement inv = g.inverse();
    double dd = d.to_double();
    auto transformed = [inv, dd, f](double x) -> Cd {
        double y = inv.act_angle(x);
        Cd val = f.eval(y);
        if (val == Cd(0.0, 0.0)) return val;
        double xf = inv.x_factor(x);  // X_{gamma}(gamma^{-1} z) = 1/X_{gamma^{-1}}(z)
        // (beta_d(g) f)(z) = [X_g(g^{-1}z)]^{d-1} f(g^{-1}z); X_g(g^{-1}z)
        // is the reciprocal of X_{g^{-1}}(z) by the cocycle at g g^{-1}.
        double factor = std::pow(1.0 / xf, dd - 1.0);
        Cd out = factor * val;
        if (f.twisted()) out *= inv.eps_factor(x);
        return out;
    };
    std::optional<Arc> support;
    if (f.support()) {
        double a = g.act_angle(f.support()->lo);
        double b = g.act_angle(f.support()->hi);
        if (a < b) support = Arc{a, b};
    }
    return TestFunction::from_function(transformed, f.twisted(), f.band(), support);
}

CheckReport mobius_cocycle_check(const MobiusElement& g1, const MobiusElement& g2,
                                 int sample_points, double tol, const std::string& label) {
    CheckReport rep;
    rep.suite = "mobius-cocycles";
    MobiusElement prod = g1 * g2;
    double max_x = 0.0, max_y = 0.0;
    for (int k = 0; k < sample_points; ++k) {
        double x = -kPi + 2.0 * kPi * (k + 0.5) / sample_points;
        double lhs_x = prod.x_factor(x);
        double rhs_x = g1.x_factor(g2.act_angle(x)) * g2.x_factor(x);
        max_x = std::max(max_x, std::abs(lhs_x - rhs_x) / std::max(1.0, std::abs(rhs_x)));

        Cd lhs_y = prod.y_factor(x);
        Cd rhs_y = g1.y_factor(g2.act_angle(x)) * g2.y_factor(x);
        max_y = std::max(max_y, std::abs(lhs_y - rhs_y));
    }
    rep.add(CheckRecord::approx("x-cocycle " + label, "derivative-cocycle",
                                std::to_string(sample_points) + " points", max_x, tol));
    rep.add(CheckRecord::approx("y-cocycle " + label, "half-angle-cocycle",
                                std::to_string(sample_points) + " points", max_y, tol));
    return rep;
}

CheckReport beta_derivative_check(HalfInt d, double p, double q, double r,
                                  const TestFunction& f2, int sample_points, double tol,
                                  double fd_step, const std::string& label) {
    CheckReport rep;
    rep.suite = "mobius-derivative";
    MobiusElement plus = MobiusElement::exp_field(p, q, r, fd_step);
    MobiusElement minus = MobiusElement::exp_field(p, q, r, -fd_step);
    double dd = d.to_double();

    auto beta_eval = [dd, &f2](const MobiusElement& g, double x) -> Cd {
        MobiusElement inv = g.inverse();
        double y = inv.act_angle(x);
        double xf = inv.x_factor(x);
        return std::pow(1.0 / xf, dd - 1.0) * f2.eval(y);
    };

    double max_rel = 0.0;
    double scale = std::max(1.0, f2.sobolev(1.0));
    for (int k = 0; k < sample_points; ++k) {
        double x = -kPi + 2.0 * kPi * (k + 0.5) / sample_points;
        Cd fd = (beta_eval(plus, x) - beta_eval(minus, x)) / (2.0 * fd_step);
        double f1 = p + q * std::cos(x) + r * std::sin(x);
        double f1p = -q * std::sin(x) + r * std::cos(x);
        Cd exact = (dd - 1.0) * f1p * f2.eval(x) - f1 * f2.eval_deriv(x);
        max_rel = std::max(max_rel, std::abs(fd - exact) / scale);
    }
    rep.add(CheckRecord::approx("beta-derivative " + label, "infinitesimal-covariance",
                                std::to_string(sample_points) + " points", max_rel, tol));
    return rep;
}

MobiusElement random_mobius(Rng& rng) {
    MobiusElement g = MobiusElement::rotation(rng.uniform(-2.0, 2.0));
    g = g * MobiusElement::dilation(rng.uniform(-1.0, 1.0));
    g = g * MobiusElement::translation(rng.uniform(-1.5, 1.5));
    return g;
}

}  // namespace vosa
