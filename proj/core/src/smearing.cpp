#include "vosa/smearing.hpp"

#include <cmath>
#include <sstream>

#include "vosa/gram.hpp"

namespace vosa {

CheckReport zeroth_order_bound_check(EvalContext& ctx, const StateVector& a,
                                     HalfInt max_weight, const std::string& label) {
    CheckReport rep;
    rep.suite = "energy-bounds";
    const VosaModel& model = ctx.model();
    QQi norm_a = norm_squared(model, a);
    HalfInt d = state_weight(a);

    for (const auto& c : model.basis()) {
        if (c.weight > max_weight) continue;
        QQi norm_c = scalar_product(model, c, c);
        // All indices with a chance to act: |m| <= wt(c) + d (outside, a_m c
        // vanishes and the bound is trivial).
        int32_t reach = c.weight.twice + d.twice;
        for (int32_t t = -reach; t <= reach; t += 2) {
            HalfInt m(d.twice % 2 == 0 ? t : t + 1);
            StateVector amc = ctx.apply_phys(a, m, StateVector::basis(c));
            if (amc.truncated) continue;
            QQi lhs = norm_squared(model, amc);
            QQi rhs = norm_a * norm_c;
            bool ok = lhs.is_real() && rhs.is_real() && lhs.re <= rhs.re;
            std::ostringstream id;
            id << "zeroth-order m=" << m.str() << " c=" << basis_state_str(c, model);
            if (!label.empty()) id << " " << label;
            rep.add(CheckRecord::exact_zero(id.str(), "zeroth-order-energy-bound",
                                            basis_state_str(c, model), ok,
                                            (lhs - rhs).str()));
        }
    }
    return rep;
}

EnergyFit energy_bound_fit(EvalContext& ctx, const StateVector& a, int max_index,
                           HalfInt max_weight) {
    const VosaModel& model = ctx.model();
    HalfInt d = state_weight(a);

    // bucket maxima of ||a_n c|| / ||c|| over (|n|, wt(c))
    std::map<std::pair<int32_t, int32_t>, double> buckets;
    for (const auto& c : model.basis()) {
        if (c.weight > max_weight) continue;
        double norm_c = std::sqrt(norm_squared(model, c).to_complex().real());
        if (norm_c == 0.0) continue;
        for (int32_t t = -2 * max_index; t <= 2 * max_index; t += 2) {
            HalfInt n(d.twice % 2 == 0 ? t : t + 1);
            StateVector anc = ctx.apply_phys(a, n, StateVector::basis(c));
            if (anc.truncated || anc.is_zero()) continue;
            double val = std::sqrt(norm_squared(model, anc).to_complex().real()) / norm_c;
            auto key = std::make_pair(std::abs(n.twice), c.weight.twice);
            auto [it, inserted] = buckets.emplace(key, val);
            if (!inserted) it->second = std::max(it->second, val);
        }
    }

    // least squares on log val = log M + s log(1+|n|) + k log(1+wt)
    double a11 = 0, a12 = 0, a13 = 0, a22 = 0, a23 = 0, a33 = 0;
    double b1 = 0, b2 = 0, b3 = 0;
    for (const auto& [key, val] : buckets) {
        double x1 = 1.0;
        double x2 = std::log1p(std::abs(key.first) / 2.0);
        double x3 = std::log1p(key.second / 2.0);
        double y = std::log(val);
        a11 += x1 * x1;
        a12 += x1 * x2;
        a13 += x1 * x3;
        a22 += x2 * x2;
        a23 += x2 * x3;
        a33 += x3 * x3;
        b1 += x1 * y;
        b2 += x2 * y;
        b3 += x3 * y;
    }
    EnergyFit fit;
    double det = a11 * (a22 * a33 - a23 * a23) - a12 * (a12 * a33 - a23 * a13) +
                 a13 * (a12 * a23 - a22 * a13);
    if (buckets.size() < 4 || std::abs(det) < 1e-12) {
        fit.trend_suspicious = true;
        return fit;
    }
    auto solve3 = [&](double c1, double c2, double c3, int col) {
        // Cramer
        double m[3][3] = {{a11, a12, a13}, {a12, a22, a23}, {a13, a23, a33}};
        m[0][col] = c1;
        m[1][col] = c2;
        m[2][col] = c3;
        double dd = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                    m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                    m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        return dd / det;
    };
    double logM = solve3(b1, b2, b3, 0);
    fit.cert.s = solve3(b1, b2, b3, 1);
    fit.cert.k = solve3(b1, b2, b3, 2);

    // envelope: shift log M up so every bucket satisfies the bound, then
    // look for residual growth with weight.
    double max_shift = 0.0;
    std::map<int32_t, double> residual_by_weight;
    for (const auto& [key, val] : buckets) {
        double pred = logM + fit.cert.s * std::log1p(std::abs(key.first) / 2.0) +
                      fit.cert.k * std::log1p(key.second / 2.0);
        double shift = std::log(val) - pred;
        max_shift = std::max(max_shift, shift);
        auto [it, inserted] = residual_by_weight.emplace(key.second, shift);
        if (!inserted) it->second = std::max(it->second, shift);
    }
    fit.cert.M = std::exp(logM + max_shift);
    fit.max_log_residual = max_shift;
    if (residual_by_weight.size() >= 3) {
        auto first = residual_by_weight.begin()->second;
        auto last = residual_by_weight.rbegin()->second;
        fit.trend_suspicious = (last - first) > 1.0;
    }
    return fit;
}

SmearResult smear(EvalContext& ctx, const StateVector& a, const TestFunction& f,
                  const StateVector& c, const EnergyCertificate& cert,
                  HalfInt weight_window) {
    const VosaModel& model = ctx.model();
    HalfInt d = state_weight(a);
    bool odd = state_parity(a) == Parity::odd;
    if (odd != f.twisted())
        throw std::domain_error("test-function twist does not match the state parity");

    SmearResult out;
    HalfInt wc = state_weight(c);
    double norm_c_k = 0.0;  // ||(L0+1)^k c||
    {
        double norm_c = state_norm(model, to_complex(c));
        norm_c_k = std::pow(1.0 + wc.to_double(), cert.k) * norm_c;
    }

    for (HalfInt n : f.indices()) {
        std::complex<double> fn = f.coeff(n);
        if (fn == std::complex<double>{0.0, 0.0}) continue;
        HalfInt w_out = wc - n;
        if (w_out < HalfInt(0)) continue;
        if (w_out > weight_window || w_out > model.cutoff()) {
            // outside the representable window: charge the certificate
            out.truncation_bound +=
                std::abs(fn) * cert.M * std::pow(1.0 + std::abs(n.to_double()), cert.s) *
                norm_c_k;
            continue;
        }
        StateVector anc = ctx.apply_phys(a, n, c);
        if (anc.truncated) {
            out.truncation_bound +=
                std::abs(fn) * cert.M * std::pow(1.0 + std::abs(n.to_double()), cert.s) *
                norm_c_k;
            continue;
        }
        CStateVector part = to_complex(anc);
        for (auto& [b, coeff] : part.terms) out.state.add_term(b, coeff * fn);
    }

    // band tail
    double tail = f.tail_l1(f.band());
    double n_factor = std::pow(1.0 + f.band(), cert.s);  // decays faster than any power
    out.truncation_bound += tail * cert.M * n_factor * norm_c_k;
    return out;
}

CheckReport rotation_covariance_check(EvalContext& ctx, const StateVector& a,
                                      const TestFunction& f, const std::vector<double>& angles,
                                      const EnergyCertificate& cert, double tol,
                                      const std::string& label) {
    CheckReport rep;
    rep.suite = "rotation-covariance";
    const VosaModel& model = ctx.model();
    bool odd = state_parity(a) == Parity::odd;

    for (double t : angles) {
        // conjugated side: e^{itL0} Y(a,f) e^{-itL0} c, phases per mode
        // rotated side: Y(a, alpha_d/beta_d(r(t)) f) c with the function
        //   re-expanded by quadrature on the circle grid
        TestFunction rotated = mobius_action(state_weight(a), MobiusElement::rotation(t), f);
        double max_res = 0.0;
        double budget = 0.0;
        for (const auto& c : model.basis()) {
            if (c.weight + HalfInt::whole(2) > model.cutoff()) continue;
            StateVector cv = StateVector::basis(c);
            CStateVector conjugated;
            for (HalfInt n : f.indices()) {
                std::complex<double> fn = f.coeff(n);
                if (fn == std::complex<double>{0.0, 0.0}) continue;
                if (c.weight - n < HalfInt(0) || c.weight - n > model.cutoff()) continue;
                StateVector anc = ctx.apply_phys(a, n, cv);
                if (anc.truncated) continue;
                double arg = -n.to_double() * t;
                std::complex<double> phase(std::cos(arg), std::sin(arg));
                CStateVector part = to_complex(anc);
                for (auto& [b, coeff] : part.terms)
                    conjugated.add_term(b, coeff * fn * phase);
            }
            SmearResult rotated_side = smear(ctx, a, rotated, cv, cert);
            CStateVector diff = conjugated;
            for (const auto& [b, coeff] : rotated_side.state.terms) diff.add_term(b, -coeff);
            max_res = std::max(max_res, state_norm(model, diff));
            budget = std::max(budget, 2.0 * rotated_side.truncation_bound);
        }
        std::ostringstream id;
        id << "rotation t=" << t;
        if (!label.empty()) id << " " << label;
        rep.add(CheckRecord::approx(id.str(), "rotation-covariance", "", max_res, tol, budget));
    }
    return rep;
}

WightmanResult wightman_locality_check(EvalContext& ctx, const StateVector& a,
                                       const TestFunction& f, const StateVector& b,
                                       const TestFunction& g,
                                       const std::vector<BasisState>& samples,
                                       const EnergyCertificate& cert_a,
                                       const EnergyCertificate& cert_b, double tol) {
    WightmanResult out;
    out.report.suite = "wightman-locality";
    const VosaModel& model = ctx.model();
    HalfInt da = state_weight(a), db = state_weight(b);
    if ((state_parity(a) == Parity::odd) != f.twisted() ||
        (state_parity(b) == Parity::odd) != g.twisted())
        throw std::domain_error("test-function twists do not match the state parities");

    // precondition: disjoint supports
    if (f.support() && g.support()) {
        const Arc& fa = *f.support();
        const Arc& ga = *g.support();
        bool disjoint = fa.hi <= ga.lo || ga.hi <= fa.lo;
        if (!disjoint) {
            CheckRecord r;
            r.id = "wightman-support";
            r.identity = "wightman-locality";
            r.verdict = Verdict::inconclusive;
            r.note = "supports not disjoint";
            out.report.add(std::move(r));
            return out;
        }
    }

    // [Y(a,f), Y(b,g)]c = sum_{j,s} kappa_{j,s} (a_{(j)}b)_{(s + D - 2 - j)} c
    // with kappa_{j,s} = sum_m f_m g_{s-m} binom(m + d_a - 1, j).
    HalfInt D = da + db;
    for (const auto& c : samples) {
        StateVector cv = StateVector::basis(c);
        CStateVector total;
        for (long j = 0;; ++j) {
            if ((da + db - HalfInt::whole(static_cast<int32_t>(j + 1))) < HalfInt(0)) break;
            StateVector ajb = ctx.apply_mode(a, j, b);
            if (ajb.is_zero()) continue;
            // s ranges where the state can be nonzero:
            // wt = wt(a_(j)b) + wt(c) - (s + D - 2 - j) - 1 >= 0, and the
            // bands cap |s| at 2B. s = m + n lies in Z - D.
            HalfInt wj = da + db - HalfInt::whole(static_cast<int32_t>(j + 1));
            int32_t s_max_twice = wj.twice + c.weight.twice - D.twice + 2 * (1 + j);
            int32_t parity_bit = ((D.twice % 2) + 2) % 2;
            int32_t s_lo = -4 * f.band() - 1;
            if (((s_lo % 2) + 2) % 2 != parity_bit) ++s_lo;
            for (int32_t st = s_lo; st <= s_max_twice; st += 2) {
                HalfInt s_h(st);
                // kappa
                std::complex<double> kappa{0.0, 0.0};
                for (HalfInt m : f.indices()) {
                    std::complex<double> fm = f.coeff(m);
                    if (fm == std::complex<double>{0.0, 0.0}) continue;
                    HalfInt n = s_h - m;
                    std::complex<double> gn = g.coeff(n);
                    if (gn == std::complex<double>{0.0, 0.0}) continue;
                    Rational top = rat((m + da).twice, 2) - 1;
                    kappa += fm * gn * binomial(top, j).get_d();
                }
                if (std::abs(kappa) == 0.0) continue;
                long paren = (s_h + D).twice / 2 - 2 - j;
                StateVector term = ctx.apply_mode(ajb, paren, cv);
                if (term.is_zero()) continue;
                if (term.truncated) continue;
                CStateVector part = to_complex(term);
                for (auto& [tb, coeff] : part.terms) total.add_term(tb, coeff * kappa);
            }
        }
        double res = state_norm(model, total);
        out.residual = std::max(out.residual, res);

        // budget: pairs with either index outside the band, bounded by the
        // certificates and the decay tails
        double wc = c.weight.to_double();
        double grow_a = cert_a.M * std::pow(1.0 + wc + g.band() + 1.0, cert_a.k);
        double grow_b = cert_b.M * std::pow(1.0 + wc + f.band() + 1.0, cert_b.k);
        double S = cert_a.s + cert_b.s + cert_a.k + cert_b.k;
        double budget = 2.0 * grow_a * grow_b *
                        (f.tail_l1(f.band()) * g.sobolev(S) + g.tail_l1(g.band()) * f.sobolev(S));
        out.budget = std::max(out.budget, budget);
        out.report.add(CheckRecord::approx("wightman c=" + basis_state_str(c, model),
                                           "wightman-locality", "", res, tol, budget));
    }
    return out;
}

}  // namespace vosa
