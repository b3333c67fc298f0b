#include "vosa/two_point.hpp"

#include <cmath>
#include <stdexcept>

#include "vosa/gram.hpp"

namespace vosa {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
using Cd = std::complex<double>;

double factorial_d(int n) {
    double out = 1.0;
    for (int j = 2; j <= n; ++j) out *= j;
    return out;
}

struct RealSupport {
    double lo, hi;
};

RealSupport real_support(const TestFunction& f) {
    if (!f.support()) throw std::domain_error("two-point machinery needs a support arc");
    const Arc& arc = *f.support();
    if (arc.lo <= -kPi || arc.hi >= kPi)
        throw std::domain_error("support must avoid the point -1 on the circle");
    return {cayley_angle_to_real(arc.lo), cayley_angle_to_real(arc.hi)};
}

}  // namespace

double cayley_angle_to_real(double theta) { return 2.0 * std::tan(theta / 2.0); }
double cayley_real_to_angle(double x) { return 2.0 * std::atan(x / 2.0); }

Cd cayley_pullback(const TestFunction& f, HalfInt d, double x) {
    double theta = cayley_real_to_angle(x);
    Cd val = f.eval(theta);
    if (val == Cd(0.0, 0.0)) return val;
    return std::pow(1.0 + 0.25 * x * x, d.to_double() - 1.0) * val;
}

Cd real_line_ft(const TestFunction& f, HalfInt d, Cd zeta, double tol) {
    RealSupport sup = real_support(f);
    auto integrand = [&](double x) -> Cd {
        Cd e = std::exp(Cd(0.0, -1.0) * zeta * x);
        return cayley_pullback(f, d, x) * e;
    };
    QuadResult r = integrate(integrand, sup.lo, sup.hi, tol, tol);
    return r.value / std::sqrt(2.0 * kPi);
}

TestFunction reflect(const TestFunction& f) {
    TestFunction out(f.twisted(), f.band());
    for (HalfInt n : f.indices()) out.set_coeff(n, f.coeff(-n));
    if (f.support()) {
        auto fn = [f](double x) { return f.eval(-x); };
        return TestFunction::from_function(fn, f.twisted(), f.band(),
                                           Arc{-f.support()->hi, -f.support()->lo});
    }
    return out;
}

std::complex<double> two_point_series(EvalContext& ctx, const TwoPointSetup& s,
                                      double* tail_bound) {
    const VosaModel& model = ctx.model();
    HalfInt da = state_weight(s.a), db = state_weight(s.b);
    if (tail_bound) *tail_bound = 0.0;
    if (da != db) return {0.0, 0.0};
    Cd pre = scalar_product(model, s.a, s.b).to_complex();
    if (pre == Cd(0.0, 0.0)) return {0.0, 0.0};

    double d = da.to_double();
    Cd sum{0.0, 0.0};
    int band = std::min(s.f.band(), s.g.band());
    for (HalfInt n : s.f.indices()) {
        if (n > -da) continue;
        if (std::abs(n.to_double()) > band) continue;
        // binom(d - n - 1, -n - d), a polynomial of degree 2d-1 in n
        long k = static_cast<long>((-n - da).twice / 2);
        Rational top = rat((da - n).twice, 2) - 1;
        double binom = binomial(top, k).get_d();
        sum += std::conj(s.f.coeff(n)) * s.g.coeff(n) * binom;
    }
    if (tail_bound) {
        double p = 2.0 * d - 1.0;
        double cf = s.f.decay_certificate(p + 2.0);
        double scale = std::pow(1.0 + 2.0 * d, p);
        *tail_bound = std::abs(pre) * scale * cf * std::pow(1.0 + band, -2.0) *
                      (s.g.tail_l1(band) + 1e-300);
    }
    return pre * sum;
}

std::complex<double> two_point_integral(EvalContext& ctx, const TwoPointSetup& s,
                                        double* err_estimate) {
    const VosaModel& model = ctx.model();
    HalfInt da = state_weight(s.a), db = state_weight(s.b);
    if (err_estimate) *err_estimate = 0.0;
    if (da != db) return {0.0, 0.0};
    Cd pre = scalar_product(model, s.a, s.b).to_complex();
    if (pre == Cd(0.0, 0.0)) return {0.0, 0.0};

    int twod = da.twice;  // 2d
    auto h = [&](double p) -> Cd {
        Cd F = real_line_ft(s.f, da, Cd(-p, 0.0), s.quad_tol);
        Cd G = real_line_ft(s.g, da, Cd(-p, 0.0), s.quad_tol);
        return std::conj(F) * G;
    };
    QuadResult r = integrate_half_line(h, twod - 1.0, s.quad_tol, s.quad_tol);
    if (err_estimate) *err_estimate = r.error;
    double norm = 2.0 * kPi * factorial_d(twod - 1);
    return pre * r.value / norm;
}

std::complex<double> bw_continuation(EvalContext& ctx, const TwoPointSetup& s, Cd z,
                                     double* err_estimate) {
    const VosaModel& model = ctx.model();
    HalfInt da = state_weight(s.a), db = state_weight(s.b);
    if (err_estimate) *err_estimate = 0.0;
    if (z.imag() < -0.5 - 1e-12 || z.imag() > 1e-12)
        throw std::domain_error("continuation parameter outside the closed strip");
    if (da != db) return {0.0, 0.0};
    if (!s.f.support() || s.f.support()->lo < 0.0)
        throw std::domain_error("supp f must lie in the upper semicircle");
    Cd pre = scalar_product(model, s.a, s.b).to_complex();
    if (pre == Cd(0.0, 0.0)) return {0.0, 0.0};

    TestFunction fj = reflect(s.f);
    TestFunction gj = reflect(s.g);
    int twod = da.twice;
    double d = da.to_double();
    Cd scale = std::exp(-2.0 * kPi * z * d);
    Cd arg_scale = std::exp(-2.0 * kPi * z);

    auto h = [&](double p) -> Cd {
        Cd u = real_line_ft(fj, da, arg_scale * p, s.quad_tol);
        Cd v = real_line_ft(gj, da, Cd(p, 0.0), s.quad_tol);
        return std::conj(v) * scale * u;
    };
    QuadResult r = integrate_half_line(h, twod - 1.0, s.quad_tol, s.quad_tol);
    if (err_estimate) *err_estimate = r.error;
    double norm = 2.0 * kPi * factorial_d(twod - 1);
    return pre * r.value / norm;
}

}  // namespace vosa
