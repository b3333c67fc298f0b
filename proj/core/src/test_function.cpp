#include "vosa/test_function.hpp"

#include <cmath>
#include <stdexcept>

#include "nlohmann/json.hpp"

namespace vosa {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

size_t grid_size(int band) {
    size_t m = 4096;
    while (m < 8 * static_cast<size_t>(band)) m *= 2;
    return m;
}
}  // namespace

std::vector<HalfInt> TestFunction::indices() const {
    std::vector<HalfInt> out;
    if (twisted_) {
        for (int t = -2 * band_ + 1; t <= 2 * band_ - 1; t += 2) out.push_back(HalfInt(t));
    } else {
        for (int n = -band_; n <= band_; ++n) out.push_back(HalfInt::whole(n));
    }
    return out;
}

size_t TestFunction::slot(HalfInt n) const {
    if (twisted_) return static_cast<size_t>((n.twice + 2 * band_ - 1) / 2);
    return static_cast<size_t>(n.twice / 2 + band_);
}

std::complex<double> TestFunction::coeff(HalfInt n) const {
    bool congruent = twisted_ ? (n.twice % 2 != 0) : (n.twice % 2 == 0);
    if (!congruent) return {0.0, 0.0};
    if (std::abs(n.to_double()) > band_) return {0.0, 0.0};
    return coeffs_[slot(n)];
}

void TestFunction::set_coeff(HalfInt n, std::complex<double> v) { coeffs_[slot(n)] = v; }

std::complex<double> TestFunction::eval(double x) const {
    if (closed_form_) return closed_form_(x);
    return eval_synthesis(x);
}

std::complex<double> TestFunction::eval_synthesis(double x) const {
    std::complex<double> out{0.0, 0.0};
    for (HalfInt n : indices()) {
        std::complex<double> c = coeffs_[slot(n)];
        if (c == std::complex<double>{0.0, 0.0}) continue;
        double arg = n.to_double() * x;
        out += c * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return out;
}

std::complex<double> TestFunction::eval_deriv(double x) const {
    std::complex<double> out{0.0, 0.0};
    for (HalfInt n : indices()) {
        std::complex<double> c = coeffs_[slot(n)];
        if (c == std::complex<double>{0.0, 0.0}) continue;
        double nn = n.to_double();
        double arg = nn * x;
        out += c * std::complex<double>(0.0, nn) *
               std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return out;
}

double TestFunction::decay_certificate(double k) const {
    double best = 0.0;
    for (HalfInt n : indices()) {
        double mag = std::abs(coeffs_[slot(n)]);
        if (mag == 0.0) continue;
        best = std::max(best, mag * std::pow(1.0 + std::abs(n.to_double()), k));
    }
    return best;
}

double TestFunction::tail_l1(double from) const {
    // sum_{|n|>N} |f_n| <= 2 C_k sum_{n>N} (1+n)^{-k} <= 2 C_k (1+N)^{1-k}/(k-1)
    double best = HUGE_VAL;
    for (int k = 2; k <= 12; ++k) {
        double ck = decay_certificate(k);
        double bound = 2.0 * ck * std::pow(1.0 + from, 1.0 - k) / (k - 1.0);
        best = std::min(best, bound);
    }
    return best;
}

double TestFunction::sobolev(double s) const {
    double out = 0.0;
    for (HalfInt n : indices())
        out += std::pow(1.0 + std::abs(n.to_double()), s) * std::abs(coeffs_[slot(n)]);
    return out;
}

bool TestFunction::certify_support(double tol) const {
    if (!support_) return true;
    size_t m = 1024;
    for (size_t k = 0; k < m; ++k) {
        double x = -kPi + 2.0 * kPi * (static_cast<double>(k) + 0.5) / m;
        if (support_->contains(x)) continue;
        if (std::abs(eval(x)) > tol) return false;
    }
    return true;
}

nlohmann::json TestFunction::to_json() const {
    nlohmann::json j;
    j["twist"] = twisted_ ? "chi" : "untwisted";
    j["band"] = band_;
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : coeffs_) cs.push_back({c.real(), c.imag()});
    j["coefficients"] = std::move(cs);
    if (support_) j["support"] = {support_->lo, support_->hi};
    return j;
}

TestFunction TestFunction::from_json(const nlohmann::json& j) {
    TestFunction f(j.at("twist").get<std::string>() == "chi", j.at("band").get<int>());
    const auto& cs = j.at("coefficients");
    if (cs.size() != f.coeffs_.size())
        throw std::invalid_argument("coefficient array size does not match the band");
    for (size_t i = 0; i < f.coeffs_.size(); ++i)
        f.coeffs_[i] = {cs[i][0].get<double>(), cs[i][1].get<double>()};
    if (j.contains("support"))
        f.support_ = Arc{j["support"][0].get<double>(), j["support"][1].get<double>()};
    return f;
}

TestFunction TestFunction::from_function(const std::function<std::complex<double>(double)>& fn,
                                         bool twisted, int band, std::optional<Arc> support,
                                         bool keep_closed_form) {
    TestFunction f(twisted, band);
    f.support_ = support;
    size_t m = grid_size(band);
    std::vector<std::complex<double>> samples(m);
    for (size_t k = 0; k < m; ++k) {
        double x = -kPi + 2.0 * kPi * static_cast<double>(k) / static_cast<double>(m);
        samples[k] = fn(x);
    }
    for (HalfInt n : f.indices()) {
        double nn = n.to_double();
        std::complex<double> acc{0.0, 0.0};
        for (size_t k = 0; k < m; ++k) {
            double x = -kPi + 2.0 * kPi * static_cast<double>(k) / static_cast<double>(m);
            double arg = -nn * x;
            acc += samples[k] * std::complex<double>(std::cos(arg), std::sin(arg));
        }
        f.coeffs_[f.slot(n)] = acc / static_cast<double>(m);
    }
    if (keep_closed_form) f.closed_form_ = fn;
    return f;
}

TestFunction make_bump(Arc arc, double sharpness, bool twisted, int band) {
    if (!(arc.lo < arc.hi) || arc.lo < -kPi || arc.hi > kPi)
        throw std::invalid_argument("bump arc must be a proper sub-arc of (-pi, pi]");
    auto fn = [arc, sharpness](double x) -> std::complex<double> {
        double t = (2.0 * x - (arc.lo + arc.hi)) / (arc.hi - arc.lo);
        if (t <= -1.0 || t >= 1.0) return {0.0, 0.0};
        return {std::exp(-sharpness * t * t / (1.0 - t * t)), 0.0};
    };
    return TestFunction::from_function(fn, twisted, band, arc);
}

TestFunction harmonic(HalfInt n, bool twisted, int band) {
    TestFunction f(twisted, band);
    if (std::abs(n.to_double()) > band) throw std::invalid_argument("harmonic outside band");
    f.set_coeff(n, {1.0, 0.0});
    return f;
}

TestFunction constant_one(int band) { return harmonic(HalfInt::whole(0), false, band); }

TestFunction rotate(const TestFunction& f, double t) {
    TestFunction out(f.twisted(), f.band());
    for (HalfInt n : f.indices()) {
        double arg = -n.to_double() * t;
        out.set_coeff(n, f.coeff(n) * std::complex<double>(std::cos(arg), std::sin(arg)));
    }
    if (f.support()) {
        Arc moved{f.support()->lo + t, f.support()->hi + t};
        if (moved.lo > -kPi && moved.hi <= kPi) {
            // support known only when the arc does not wrap
            nlohmann::json j = out.to_json();
            j["support"] = {moved.lo, moved.hi};
            out = TestFunction::from_json(j);
        }
    }
    return out;
}

TestFunction pointwise_product(const TestFunction& a, const TestFunction& b, int band) {
    bool twisted = a.twisted() != b.twisted();
    std::optional<Arc> support;
    if (a.support() && b.support()) {
        Arc inter{std::max(a.support()->lo, b.support()->lo),
                  std::min(a.support()->hi, b.support()->hi)};
        if (inter.lo < inter.hi) support = inter;
    } else if (a.support()) {
        support = a.support();
    } else if (b.support()) {
        support = b.support();
    }
    auto fn = [a, b](double x) { return a.eval(x) * b.eval(x); };
    return TestFunction::from_function(fn, twisted, band, support);
}

}  // namespace vosa
