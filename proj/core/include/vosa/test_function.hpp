#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "nlohmann/json_fwd.hpp"
#include "vosa/half_int.hpp"

namespace vosa {

// Open arc of angles (lo, hi) in (-pi, pi], lo < hi.
struct Arc {
    double lo = 0.0;
    double hi = 0.0;
    double length() const { return hi - lo; }
    bool contains(double x) const { return x > lo && x < hi; }
};

// Smooth function on the circle (or on its chi-twisted line bundle), held as
// a Fourier band |n| <= band together with an optional closed-form
// evaluator. Twisted functions carry half-integer indices; everything with
// support away from -1 lives in both spaces, so the same samples serve
// either index set.
class TestFunction {
public:
    TestFunction() = default;
    TestFunction(bool twisted, int band) : twisted_(twisted), band_(band) {
        coeffs_.assign(size(), {0.0, 0.0});
    }

    bool twisted() const { return twisted_; }
    int band() const { return band_; }
    const std::optional<Arc>& support() const { return support_; }

    // Index set: n in Z (untwisted) or Z - 1/2 (twisted), |n| <= band.
    std::vector<HalfInt> indices() const;
    std::complex<double> coeff(HalfInt n) const;
    void set_coeff(HalfInt n, std::complex<double> v);

    // Pointwise value at angle x: the closed form when present, otherwise
    // Fourier synthesis over the band.
    std::complex<double> eval(double x) const;
    std::complex<double> eval_synthesis(double x) const;
    // d/dx via the band.
    std::complex<double> eval_deriv(double x) const;

    // max_n |f_n| (1+|n|)^k over the band.
    double decay_certificate(double k) const;
    // Bound for sum_{|n| > from} |f_n| from the strongest usable decay
    // certificate.
    double tail_l1(double from) const;
    // l^1 Sobolev norm sum (1+|n|)^s |f_n| over the band.
    double sobolev(double s) const;

    bool certify_support(double tol = 1e-10) const;

    nlohmann::json to_json() const;
    static TestFunction from_json(const nlohmann::json& j);

    // Resamples an arbitrary smooth function into the band; spectrally
    // accurate for smooth compactly supported integrands.
    static TestFunction from_function(const std::function<std::complex<double>(double)>& f,
                                      bool twisted, int band, std::optional<Arc> support,
                                      bool keep_closed_form = true);

private:
    size_t size() const { return twisted_ ? 2 * band_ : 2 * band_ + 1; }
    size_t slot(HalfInt n) const;

    bool twisted_ = false;
    int band_ = 0;
    std::vector<std::complex<double>> coeffs_;
    std::optional<Arc> support_;
    std::function<std::complex<double>(double)> closed_form_;
};

// exp(-sharpness/(1-t^2)) bump on the arc, t the affine coordinate.
TestFunction make_bump(Arc arc, double sharpness, bool twisted, int band);

// Pure harmonic e_n(z) = z^n (n matching the twist congruence).
TestFunction harmonic(HalfInt n, bool twisted, int band);

// f(z) = 1 (untwisted only).
TestFunction constant_one(int band);

// Rotated function f_t(z) = f(e^{-it} z) as coefficient phases.
TestFunction rotate(const TestFunction& f, double t);

// Pointwise product (same twist rules as multiplying by a smooth function).
TestFunction pointwise_product(const TestFunction& a, const TestFunction& b, int band);

}  // namespace vosa
