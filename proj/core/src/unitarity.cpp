#include "vosa/unitarity.hpp"

#include <sstream>

#include "nlohmann/json.hpp"
#include "vosa/rng.hpp"

namespace vosa {

BilinearForm::BilinearForm(const VosaModel& model) : model_(model), ctx_(model) {}

QQi BilinearForm::pair(const BasisState& u, const BasisState& v) {
    return pair(StateVector::basis(u), StateVector::basis(v));
}

QQi BilinearForm::pair(const StateVector& u, const StateVector& v) {
    if (u.is_zero() || v.is_zero()) return QQi(0);
    QQi out(0);
    for (const auto& [ub, uc] : u.terms) {
        if (ub.is_vacuum()) {
            auto it = v.terms.find(BasisState{});
            if (it != v.terms.end()) out += uc * it->second;
            continue;
        }
        // peel u = g_m u'
        Mode outer = ub.factors.front();
        BasisState restb;
        restb.factors.assign(ub.factors.begin() + 1, ub.factors.end());
        restb.weight = ub.weight + outer.index;
        restb.parity = ub.parity + model_.generator(outer.gen).parity;

        const auto& gen = model_.generator(outer.gen);
        StateVector gen_state =
            StateVector::basis(model_.make_state({{outer.gen, -gen.weight}}));
        int sign = weight_sign(gen.weight);

        StateVector l1a = gen_state;
        for (long l = 0;; ++l) {
            if (l > 0) {
                l1a = ctx_.virasoro(1, l1a);
                l1a *= QQi(rat(1, l));
            }
            if (l1a.is_zero()) break;
            StateVector transported = ctx_.apply_phys(l1a, -outer.index, v);
            if (!transported.is_zero()) {
                QQi inner = pair(StateVector::basis(restb), transported);
                out += uc * QQi(Rational(sign)) * inner;
            }
            if ((gen.weight - HalfInt::whole(static_cast<int32_t>(l + 1))) < HalfInt(0)) break;
        }
    }
    return out;
}

GramMatrix BilinearForm::matrix(HalfInt weight) {
    GramMatrix g;
    g.weight = weight;
    g.states = model_.basis_at(weight);
    size_t n = g.states.size();
    g.entries.assign(n, std::vector<QQi>(n, QQi(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) g.entries[i][j] = pair(g.states[i], g.states[j]);
    return g;
}

AdjointMode adjoint_mode(EvalContext& ctx, const PctCandidate& pct, const StateVector& a,
                         HalfInt n) {
    StateVector l1a = ctx.virasoro(1, a);
    if (!l1a.is_zero())
        throw std::domain_error("adjoint_mode requires a quasi-primary vector (L_1 a != 0)");
    AdjointMode adj;
    adj.theta_a = pct.apply(a);
    adj.sign = weight_sign(state_weight(a));
    adj.index = n;
    return adj;
}

CheckReport adjoint_mode_check(EvalContext& ctx, const PctCandidate& pct, const StateVector& a,
                               HalfInt n, const std::string& label) {
    CheckReport rep;
    rep.suite = "adjoint";
    const VosaModel& model = ctx.model();
    AdjointMode adj = adjoint_mode(ctx, pct, a, n);
    for (const auto& b : model.basis()) {
        StateVector anb = ctx.apply_phys(a, n, StateVector::basis(b));
        if (anb.truncated) continue;
        for (const auto& c : model.basis()) {
            if (b.weight - n != c.weight) continue;
            QQi lhs = scalar_product(model, anb, StateVector::basis(c));
            StateVector transported =
                ctx.apply_phys(adj.theta_a, -n, StateVector::basis(c));
            if (transported.truncated) continue;
            QQi rhs = scalar_product(model, StateVector::basis(b), transported);
            if (adj.sign < 0) rhs = -rhs;
            std::ostringstream id;
            id << "adjoint n=" << n.str() << " b=" << basis_state_str(b, model)
               << " c=" << basis_state_str(c, model);
            if (!label.empty()) id << " " << label;
            rep.add(CheckRecord::exact_zero(id.str(), "quasi-primary-adjoint", "",
                                            lhs == rhs, (lhs - rhs).str()));
        }
    }
    return rep;
}

HermitianFieldResult hermitian_field_check(EvalContext& ctx, const PctCandidate& pct,
                                           const StateVector& a) {
    HermitianFieldResult res;
    StateVector l1a = ctx.virasoro(1, a);
    if (!l1a.is_zero()) {
        res.witness = "not quasi-primary";
        return res;
    }
    // a_n^+ = a_{-n} for all n iff (-1)^{2d^2+d} theta(a) = a.
    StateVector expect = pct.apply(a);
    if (weight_sign(state_weight(a)) < 0) expect *= QQi(-1);
    StateVector diff = expect - a;
    if (!diff.is_zero()) {
        res.witness = "sign-transported PCT image differs from the vector";
        return res;
    }
    const VosaModel& model = ctx.model();
    HalfInt d = state_weight(a);
    // brute-force (a_n b | c) = (b | a_{-n} c) over a small window
    for (int t = -6; t <= 6; ++t) {
        HalfInt n(2 * t + (d.twice % 2 != 0 ? 1 : 0));
        for (const auto& b : model.basis()) {
            if (b.weight > HalfInt::whole(3)) continue;
            StateVector anb = ctx.apply_phys(a, n, StateVector::basis(b));
            if (anb.truncated) continue;
            for (const auto& c : model.basis_at(b.weight - n)) {
                QQi lhs = scalar_product(model, anb, StateVector::basis(c));
                StateVector amc = ctx.apply_phys(a, -n, StateVector::basis(c));
                if (amc.truncated) continue;
                QQi rhs = scalar_product(model, StateVector::basis(b), amc);
                if (lhs != rhs) {
                    res.witness = "matrix element mismatch at n=" + n.str() +
                                  " b=" + basis_state_str(b, model) +
                                  " c=" + basis_state_str(c, model);
                    return res;
                }
            }
        }
    }
    res.hermitian = true;
    return res;
}

CheckReport verify_unitarity(EvalContext& ctx, const PctCandidate& pct, uint64_t seed,
                             int samples) {
    CheckReport rep;
    rep.suite = "unitarity";
    const VosaModel& model = ctx.model();

    // (i) exact positivity of every Gram block
    for (int32_t t = 0; t <= model.cutoff().twice; ++t) {
        HalfInt w(t);
        GramReport g = gram(model, w);
        CheckRecord r;
        r.id = "gram-positive w=" + w.str();
        r.identity = "scalar-product-positivity";
        r.inputs = "dim " + std::to_string(g.dim);
        r.exact = true;
        if (g.positive_definite) {
            r.residual = "0";
            r.verdict = Verdict::pass;
        } else {
            r.residual = "kernel dim " + std::to_string(g.kernel.size());
            r.verdict = Verdict::fail;
            if (!g.kernel.empty())
                r.note = "kernel witness: " + residual_string(g.kernel.front());
            else
                r.note = "indefinite block";
        }
        rep.add(std::move(r));
    }

    // theta fixes the vacuum and the conformal vector, and is an involution
    {
        StateVector om = StateVector::basis(model.vacuum());
        rep.add(CheckRecord::exact_zero("pct-vacuum", "pct-involution", "",
                                        pct.apply(om) == om));
        const StateVector& nu = model.conformal_vector();
        rep.add(CheckRecord::exact_zero("pct-conformal", "pct-involution", "",
                                        pct.apply(nu) == nu));
        bool invol = true;
        for (const auto& b : model.basis()) {
            StateVector twice = pct.apply(pct.apply(StateVector::basis(b)));
            if (!(twice == StateVector::basis(b))) {
                invol = false;
                break;
            }
        }
        rep.add(CheckRecord::exact_zero("pct-squared", "pct-involution", "", invol));
    }

    // (ii) invariance of the scalar product, mode-wise:
    // (a_n b | c) = (-1)^{2d^2+d} sum_l (b | (theta L_1^l a)_{-n} c)/l!
    Rng rng(seed);
    const auto& basis = model.basis();
    if (!basis.empty()) {
        for (int s = 0; s < samples; ++s) {
            const BasisState& a = basis[rng.below(basis.size())];
            const BasisState& b = basis[rng.below(basis.size())];
            if (a.is_vacuum()) continue;
            HalfInt d = a.weight;
            int64_t steps = rng.range(-3, 3);
            HalfInt n(static_cast<int32_t>(2 * steps + (d.twice % 2 != 0 ? 1 : 0)));
            HalfInt wc = b.weight - n;
            auto cs = model.basis_at(wc);
            if (cs.empty()) continue;
            const BasisState& c = cs[rng.below(cs.size())];

            StateVector av = StateVector::basis(a);
            StateVector anb = ctx.apply_phys(av, n, StateVector::basis(b));
            if (anb.truncated) continue;
            QQi lhs = scalar_product(model, anb, StateVector::basis(c));

            QQi rhs(0);
            StateVector l1a = av;
            bool truncated = false;
            for (long l = 0;; ++l) {
                if (l > 0) {
                    l1a = ctx.virasoro(1, l1a);
                    l1a *= QQi(rat(1, l));
                }
                if (l1a.is_zero()) break;
                StateVector th = pct.apply(l1a);
                StateVector tr = ctx.apply_phys(th, -n, StateVector::basis(c));
                truncated = truncated || tr.truncated;
                rhs += scalar_product(model, StateVector::basis(b), tr);
            }
            if (truncated) continue;
            if (weight_sign(d) < 0) rhs = -rhs;
            std::ostringstream id;
            id << "invariance sample " << s;
            rep.add(CheckRecord::exact_zero(
                id.str(), "scalar-product-invariance",
                basis_state_str(a, model) + " n=" + n.str(), lhs == rhs,
                (lhs - rhs).str()));
        }

        // (iii) the antilinear involution bar(a) = e^{L_1}(-1)^{2d^2+d}theta(a)
        // with (a_n b | c) = (b | bar(a)_{-n} c), plus antiunitarity of theta.
        for (int s = 0; s < samples; ++s) {
            const BasisState& a = basis[rng.below(basis.size())];
            const BasisState& b = basis[rng.below(basis.size())];
            if (a.is_vacuum()) continue;
            HalfInt d = a.weight;
            int64_t steps = rng.range(-3, 3);
            HalfInt n(static_cast<int32_t>(2 * steps + (d.twice % 2 != 0 ? 1 : 0)));
            auto cs = model.basis_at(b.weight - n);
            if (cs.empty()) continue;
            const BasisState& c = cs[rng.below(cs.size())];

            StateVector av = StateVector::basis(a);
            StateVector bar = pct.apply(av);
            if (weight_sign(d) < 0) bar *= QQi(-1);
            // e^{L_1}: the sum terminates by the grading
            StateVector ebar = bar;
            StateVector term = bar;
            for (long l = 1;; ++l) {
                term = ctx.virasoro(1, term);
                term *= QQi(rat(1, l));
                if (term.is_zero()) break;
                ebar += term;
            }
            StateVector anb = ctx.apply_phys(av, n, StateVector::basis(b));
            StateVector barc = ctx.apply_phys(ebar, -n, StateVector::basis(c));
            if (anb.truncated || barc.truncated) continue;
            QQi lhs = scalar_product(model, anb, StateVector::basis(c));
            QQi rhs = scalar_product(model, StateVector::basis(b), barc);
            std::ostringstream id;
            id << "involution sample " << s;
            rep.add(CheckRecord::exact_zero(id.str(), "antilinear-involution",
                                            basis_state_str(a, model) + " n=" + n.str(),
                                            lhs == rhs, (lhs - rhs).str()));

            QQi anti_l = scalar_product(model, pct.apply(StateVector::basis(a)),
                                        pct.apply(StateVector::basis(b)));
            QQi anti_r = scalar_product(model, StateVector::basis(b), StateVector::basis(a));
            rep.add(CheckRecord::exact_zero("antiunitary sample " + std::to_string(s),
                                            "pct-antiunitary", basis_state_str(a, model),
                                            anti_l == anti_r.conj(),
                                            (anti_l - anti_r.conj()).str()));
        }
    }
    return rep;
}

nlohmann::json gram_report_json(const VosaModel& model, const GramReport& rep) {
    nlohmann::json j;
    j["weight"] = rep.weight.str();
    j["dim"] = rep.dim;
    j["rank"] = rep.rank;
    j["positive_definite"] = rep.positive_definite;
    j["positive_semidefinite"] = rep.positive_semidefinite;
    nlohmann::json pivots = nlohmann::json::array();
    for (const auto& p : rep.pivots) pivots.push_back(p.get_str());
    j["pivots"] = std::move(pivots);
    nlohmann::json kernel = nlohmann::json::array();
    for (const auto& v : rep.kernel) {
        nlohmann::json vec = nlohmann::json::array();
        for (const auto& [b, coeff] : v.terms)
            vec.push_back({{"state", basis_state_str(b, model)}, {"coeff", coeff.str()}});
        kernel.push_back(std::move(vec));
    }
    j["kernel"] = std::move(kernel);
    return j;
}

std::string gram_summary_csv(const VosaModel& model) {
    std::ostringstream os;
    os << "weight,dim,rank,positive_definite\n";
    for (int32_t t = 0; t <= model.cutoff().twice; ++t) {
        HalfInt w(t);
        GramReport g = gram(model, w);
        os << w.str() << "," << g.dim << "," << g.rank << ","
           << (g.positive_definite ? 1 : 0) << "\n";
    }
    return os.str();
}

}  // namespace vosa
