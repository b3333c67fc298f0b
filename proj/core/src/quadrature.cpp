#include "vosa/quadrature.hpp"

#include <cmath>
#include <vector>

namespace vosa {

namespace {

// 15-point Kronrod extension of 7-point Gauss (QUADPACK dqk15 abscissae).
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.02293532201052922, 0.06309209262997855, 0.10479001032225018, 0.14065325971552592,
    0.16900472663926790, 0.19035057806478541, 0.20443294007529889, 0.20948214108472783};
constexpr double kWg[4] = {
    0.12948496616886969, 0.27970539148927667, 0.38183005050511894, 0.41795918367346939};

struct PanelEval {
    Cplx kronrod;
    double error;
};

PanelEval gk15(const std::function<Cplx(double)>& f, double a, double b) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    Cplx fc = f(c);
    Cplx kron = kWgk[7] * fc;
    Cplx gauss = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        Cplx f1 = f(c - h * kXgk[i]);
        Cplx f2 = f(c + h * kXgk[i]);
        kron += kWgk[i] * (f1 + f2);
        if (i % 2 == 1) gauss += kWg[i / 2] * (f1 + f2);
    }
    kron *= h;
    gauss *= h;
    return {kron, std::abs(kron - gauss)};
}

}  // namespace

QuadResult integrate(const std::function<Cplx(double)>& f, double a, double b, double abs_tol,
                     double rel_tol, int max_depth) {
    QuadResult out;
    if (a == b) return out;

    struct Panel {
        double a, b;
        int depth;
    };
    std::vector<Panel> stack{{a, b, 0}};
    double scale = 0.0;
    while (!stack.empty()) {
        Panel p = stack.back();
        stack.pop_back();
        PanelEval e = gk15(f, p.a, p.b);
        scale = std::max(scale, std::abs(e.kronrod));
        double target = std::max(abs_tol, rel_tol * scale) *
                        std::max(1e-3, (p.b - p.a) / (b - a));
        if (e.error <= target || p.depth >= max_depth) {
            out.value += e.kronrod;
            out.error += e.error;
            if (p.depth >= max_depth && e.error > target) out.converged = false;
            continue;
        }
        double mid = 0.5 * (p.a + p.b);
        stack.push_back({p.a, mid, p.depth + 1});
        stack.push_back({mid, p.b, p.depth + 1});
    }
    return out;
}

QuadResult integrate_half_line(const std::function<Cplx(double)>& h, double power,
                               double abs_tol, double rel_tol) {
    auto weighted = [&](double p) -> Cplx { return h(p) * std::pow(p, power); };
    QuadResult total = integrate(weighted, 0.0, 1.0, abs_tol, rel_tol);
    double lo = 1.0;
    int quiet = 0;
    for (int panel = 0; panel < 64 && quiet < 3; ++panel) {
        double hi = lo * 2.0;
        QuadResult part = integrate(weighted, lo, hi, abs_tol, rel_tol);
        total.value += part.value;
        total.error += part.error;
        total.converged = total.converged && part.converged;
        double size = std::abs(part.value);
        if (size < abs_tol + rel_tol * std::abs(total.value))
            ++quiet;
        else
            quiet = 0;
        lo = hi;
    }
    return total;
}

}  // namespace vosa
