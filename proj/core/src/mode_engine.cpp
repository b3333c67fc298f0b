#include "vosa/mode_engine.hpp"

#include <sstream>
#include <stdexcept>

#include "vosa/gram.hpp"
#include "vosa/models.hpp"

namespace vosa {

namespace {

// Weight-shifted index of the outermost factor in the integer indexing:
// g_m = g_{(m + d - 1)}.
long paren_index(const VosaModel& model, const Mode& m) {
    HalfInt shifted = m.index + model.generator(m.gen).weight;
    return shifted.twice / 2 - 1;
}

HalfInt phys_index(const VosaModel& model, GenId g, long n) {
    // g_{(n)} = g_{n + 1 - d}
    return HalfInt::whole(static_cast<int32_t>(n + 1)) - model.generator(g).weight;
}

std::string brief(const StateVector& v, const VosaModel& model) {
    if (v.is_zero()) return "0";
    std::ostringstream os;
    size_t shown = 0;
    for (const auto& [b, c] : v.terms) {
        if (shown++ == 2) {
            os << "+...";
            break;
        }
        if (shown > 1) os << " + ";
        os << "(" << c.str() << ")" << basis_state_str(b, model);
    }
    return os.str();
}

}  // namespace

EvalContext::EvalContext(const VosaModel& model, int j_ceiling)
    : model_(model), j_ceiling_(j_ceiling) {}

uint32_t EvalContext::intern(const BasisState& b) {
    auto [it, inserted] = ids_.emplace(b, static_cast<uint32_t>(ids_.size()));
    return it->second;
}

StateVector EvalContext::apply_mode(const BasisState& a, long n, const BasisState& c) {
    return apply_basis(a, n, c);
}

StateVector EvalContext::apply_basis(const BasisState& a, long n, const BasisState& c) {
    if (a.is_vacuum()) {
        StateVector out;
        if (n == -1) out.add_term(c, QQi(1));
        return out;
    }
    const Mode outer = a.factors.front();
    const auto& gen = model_.generator(outer.gen);

    if (a.size() == 1 && outer.index == -gen.weight) {
        // Generator state: direct mode rule.
        return model_.apply_generator(outer.gen, phys_index(model_, outer.gen, n), c);
    }

    auto key = std::make_tuple(intern(a), n, intern(c));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // Peel a = g_{(n0)} rest and expand (g_{(n0)} rest)_{(n)} c through the
    // associative formula.
    BasisState rest;
    rest.factors.assign(a.factors.begin() + 1, a.factors.end());
    rest.weight = a.weight + outer.index;
    rest.parity = a.parity + gen.parity;
    long n0 = paren_index(model_, outer);
    int sign_n0 = (n0 % 2 == 0) ? 1 : -1;
    int kz = koszul(gen.parity, rest.parity);

    StateVector result;
    for (long j = 0;; ++j) {
        if (j > j_ceiling_)
            throw std::runtime_error("associative-formula j-sum exceeded ceiling " +
                                     std::to_string(j_ceiling_));
        // first part: g_{(n0-j)} (rest_{(n+j)} c)
        bool first_alive =
            (rest.weight + c.weight - HalfInt::whole(static_cast<int32_t>(n + j + 1))) >=
            HalfInt(0);
        // second part: rest_{(n0+n-j)} (g_{(j)} c), g_{(j)} c has weight
        // wt(c) + d_g - j - 1
        bool second_alive =
            (c.weight + gen.weight - HalfInt::whole(static_cast<int32_t>(j + 1))) >= HalfInt(0);
        if (!first_alive && !second_alive) break;

        QQi coeff = QQi(binomial(Rational(n0), j));
        if (j % 2 != 0) coeff = -coeff;
        if (coeff.is_zero()) continue;

        if (first_alive) {
            StateVector inner = apply_basis(rest, n + j, c);
            if (!inner.is_zero() || inner.truncated) {
                StateVector part = model_.apply_generator(
                    outer.gen, phys_index(model_, outer.gen, n0 - j), inner);
                part *= coeff;
                result += part;
            }
        }
        if (second_alive) {
            StateVector inner =
                model_.apply_generator(outer.gen, phys_index(model_, outer.gen, j), c);
            if (!inner.is_zero() || inner.truncated) {
                StateVector part = apply_mode(StateVector::basis(rest), n0 + n - j, inner);
                part *= coeff * QQi(Rational(-sign_n0 * kz));
                result += part;
            }
        }
    }
    memo_.emplace(key, result);
    return result;
}

StateVector EvalContext::apply_mode(const StateVector& a, long n, const StateVector& c) {
    StateVector out;
    out.truncated = a.truncated || c.truncated;
    for (const auto& [ab, ac] : a.terms)
        for (const auto& [cb, cc] : c.terms) {
            StateVector part = apply_basis(ab, n, cb);
            out.truncated = out.truncated || part.truncated;
            QQi f = ac * cc;
            for (const auto& [pb, pc] : part.terms) out.add_term(pb, f * pc);
        }
    return out;
}

StateVector EvalContext::apply_phys(const StateVector& a, HalfInt m, const StateVector& c) {
    StateVector out;
    out.truncated = a.truncated || c.truncated;
    // split a into weight-homogeneous layers: a_m = sum over components
    std::map<HalfInt, StateVector> layers;
    for (const auto& [b, coeff] : a.terms) layers[b.weight].add_term(b, coeff);
    for (auto& [d, layer] : layers) {
        HalfInt shifted = m + d;  // (n)-index + 1
        if (shifted.twice % 2 != 0) continue;  // wrong congruence: zero mode
        long n = shifted.twice / 2 - 1;
        StateVector part = apply_mode(layer, n, c);
        out.truncated = out.truncated || part.truncated;
        for (const auto& [pb, pc] : part.terms) out.add_term(pb, pc);
    }
    return out;
}

StateVector EvalContext::virasoro(long k, const StateVector& v) {
    return apply_mode(model_.conformal_vector(), k + 1, v);
}

StateVector EvalContext::translation_power(const StateVector& v, long l) {
    StateVector out = v;
    for (long i = 1; i <= l; ++i) {
        out = virasoro(-1, out);
        out *= QQi(rat(1, i));
        if (out.is_zero()) break;
    }
    return out;
}

StateVector EvalContext::graded_commutator(const StateVector& a, HalfInt m,
                                           const StateVector& b, HalfInt k,
                                           const StateVector& c) {
    int kz = koszul(state_parity(a), state_parity(b));
    StateVector first = apply_phys(a, m, apply_phys(b, k, c));
    StateVector second = apply_phys(b, k, apply_phys(a, m, c));
    if (kz < 0) second *= QQi(-1);
    return first - second;
}

StateVector EvalContext::commutator_formula(const StateVector& a, long m, const StateVector& b,
                                            long k, const StateVector& c) {
    StateVector out;
    HalfInt wa = state_weight(a), wb = state_weight(b);
    for (long j = 0;; ++j) {
        if ((wa + wb - HalfInt::whole(static_cast<int32_t>(j + 1))) < HalfInt(0)) break;
        QQi coeff = QQi(binomial(Rational(m), j));
        if (coeff.is_zero()) continue;
        StateVector aj_b = apply_mode(a, j, b);
        if (aj_b.is_zero()) continue;
        StateVector part = apply_mode(aj_b, m + k - j, c);
        part *= coeff;
        out += part;
    }
    return out;
}

HalfInt state_weight(const StateVector& v) {
    if (v.is_zero()) throw std::domain_error("zero vector has no weight");
    HalfInt w = v.terms.begin()->first.weight;
    for (const auto& [b, c] : v.terms)
        if (b.weight != w) throw std::domain_error("state is not weight-homogeneous");
    return w;
}

Parity state_parity(const StateVector& v) {
    if (v.is_zero()) return Parity::even;
    Parity p = v.terms.begin()->first.parity;
    for (const auto& [b, c] : v.terms)
        if (b.parity != p) throw std::domain_error("state is not parity-homogeneous");
    return p;
}

std::string residual_string(const StateVector& v) {
    Rational total = 0;
    for (const auto& [b, c] : v.terms) total += abs(c.re) + abs(c.im);
    return total.get_str();
}

CheckReport check_borcherds(EvalContext& ctx, const StateVector& a, const StateVector& b,
                            const StateVector& c, int box_radius, const std::string& label) {
    CheckReport rep;
    rep.suite = "borcherds";
    const VosaModel& model = ctx.model();
    HalfInt wa = state_weight(a), wb = state_weight(b);
    int kz = koszul(state_parity(a), state_parity(b));
    HalfInt wc = c.is_zero() ? HalfInt(0) : state_weight(c);

    for (int m = -box_radius; m <= box_radius; ++m)
        for (int n = -box_radius; n <= box_radius; ++n)
            for (int k = -box_radius; k <= box_radius; ++k) {
                StateVector lhs;
                for (long j = 0;; ++j) {
                    if ((wa + wb - HalfInt::whole(static_cast<int32_t>(n + j + 1))) < HalfInt(0))
                        break;
                    QQi coeff = QQi(binomial(Rational(m), j));
                    if (coeff.is_zero()) continue;
                    StateVector inner = ctx.apply_mode(a, n + j, b);
                    if (inner.is_zero() && !inner.truncated) continue;
                    StateVector part = ctx.apply_mode(inner, m + k - j, c);
                    part *= coeff;
                    lhs += part;
                }
                StateVector rhs;
                for (long j = 0;; ++j) {
                    bool alive1 =
                        (wb + wc - HalfInt::whole(static_cast<int32_t>(k + j + 1))) >= HalfInt(0);
                    bool alive2 =
                        (wa + wc - HalfInt::whole(static_cast<int32_t>(m + j + 1))) >= HalfInt(0);
                    if (!alive1 && !alive2) break;
                    QQi coeff = QQi(binomial(Rational(n), j));
                    if (j % 2 != 0) coeff = -coeff;
                    if (coeff.is_zero()) continue;
                    if (alive1) {
                        StateVector part =
                            ctx.apply_mode(a, m + n - j, ctx.apply_mode(b, k + j, c));
                        part *= coeff;
                        rhs += part;
                    }
                    if (alive2) {
                        StateVector part =
                            ctx.apply_mode(b, n + k - j, ctx.apply_mode(a, m + j, c));
                        int sign = ((n % 2 == 0) ? 1 : -1) * kz;
                        part *= coeff * QQi(Rational(-sign));
                        rhs += part;
                    }
                }
                StateVector residual = lhs - rhs;
                std::ostringstream id;
                id << "borcherds(" << m << "," << n << "," << k << ")";
                if (!label.empty()) id << " " << label;
                if (residual.truncated) {
                    CheckRecord r;
                    r.id = id.str();
                    r.identity = "borcherds-identity";
                    r.inputs = brief(a, model) + "; " + brief(b, model) + "; " + brief(c, model);
                    r.verdict = Verdict::inconclusive;
                    r.note = "insufficient cutoff headroom";
                    rep.add(std::move(r));
                } else {
                    rep.add(CheckRecord::exact_zero(
                        id.str(), "borcherds-identity",
                        brief(a, model) + "; " + brief(b, model) + "; " + brief(c, model),
                        residual.is_zero(), residual_string(residual)));
                }
            }
    return rep;
}

CheckReport check_skew_symmetry(EvalContext& ctx, const StateVector& a, const StateVector& b,
                                int max_order, const std::string& label) {
    CheckReport rep;
    rep.suite = "skew-symmetry";
    const VosaModel& model = ctx.model();
    HalfInt wa = state_weight(a), wb = state_weight(b);
    int kz = koszul(state_parity(a), state_parity(b));
    int kmin = -(wa + wb).twice / 2 - 1;

    for (int k = kmin; k <= max_order; ++k) {
        StateVector lhs = ctx.apply_mode(a, -k - 1, b);
        StateVector rhs;
        for (long l = 0;; ++l) {
            long m = l - k - 1;
            if ((wa + wb - HalfInt::whole(static_cast<int32_t>(m + 1))) < HalfInt(0)) break;
            StateVector bm_a = ctx.apply_mode(b, m, a);
            if (bm_a.is_zero()) continue;
            StateVector part = ctx.translation_power(bm_a, l);
            int sign = ((m % 2 == 0) ? -1 : 1) * kz;  // (-1)^{m+1} kz
            part *= QQi(Rational(sign));
            rhs += part;
        }
        StateVector residual = lhs - rhs;
        std::ostringstream id;
        id << "skew(z^" << k << ")";
        if (!label.empty()) id << " " << label;
        rep.add(CheckRecord::exact_zero(id.str(), "skew-symmetry",
                                        brief(a, model) + "; " + brief(b, model),
                                        residual.is_zero(), residual_string(residual)));
    }
    return rep;
}

LocalityResult locality_order(EvalContext& ctx, const StateVector& a, const StateVector& b,
                              const BasisState& c, const BasisState& d, int ceiling) {
    LocalityResult res;
    const VosaModel& model = ctx.model();
    HalfInt wa = state_weight(a), wb = state_weight(b);
    int kz = koszul(state_parity(a), state_parity(b));
    StateVector cv = StateVector::basis(c);

    // The matrix element lives on the anti-diagonal m + k = s; off it the
    // grading kills every term.
    HalfInt s_h = wa + wb + c.weight - d.weight - HalfInt::whole(2);
    if (s_h.twice % 2 != 0) {
        res.order = 0;
        res.determined = true;
        res.detail = "mode congruence keeps the matrix element empty";
        return res;
    }
    long s = s_h.twice / 2;

    // v_m is a polynomial in m of degree < #nonzero products a_{(j)}b, so a
    // window of that length pins it down; two off-window spot checks guard
    // the polynomial model.
    long dmax = std::max<long>(0, (wa + wb).twice / 2);
    long half = dmax + 2;
    long center = s / 2;

    auto element = [&](long m) -> QQi {
        StateVector first = ctx.apply_mode(a, m, ctx.apply_mode(b, s - m, cv));
        StateVector second = ctx.apply_mode(b, s - m, ctx.apply_mode(a, m, cv));
        if (kz < 0) second *= QQi(-1);
        StateVector comm = first - second;
        if (comm.truncated) throw std::runtime_error("truncated commutator");
        return scalar_product(model, StateVector::basis(d), comm);
    };

    long m_start = center - half;
    std::vector<QQi> window;
    try {
        for (long m = m_start; m <= center + half; ++m) window.push_back(element(m));
    } catch (const std::runtime_error&) {
        res.detail = "insufficient cutoff headroom for the Laurent window";
        return res;
    }

    // Newton form from the window start: v(m) = sum_j binom(m - m_start, j)
    // Delta^j v(m_start). The commutator formula makes v a polynomial of
    // degree <= dmax, so the window determines it; two distant probes guard
    // the extension.
    std::vector<QQi> newton;
    {
        std::vector<QQi> diffs = window;
        for (size_t level = 0; level < window.size(); ++level) {
            newton.push_back(diffs.front());
            std::vector<QQi> next;
            for (size_t i = 0; i + 1 < diffs.size(); ++i) next.push_back(diffs[i + 1] - diffs[i]);
            diffs = std::move(next);
            if (diffs.empty()) break;
        }
    }
    auto newton_eval = [&](long m) {
        QQi out(0);
        for (size_t j = 0; j < newton.size(); ++j) {
            if (newton[j].is_zero()) continue;
            out += newton[j] * QQi(binomial(Rational(m - m_start), static_cast<long>(j)));
        }
        return out;
    };
    try {
        for (long m : {m_start - dmax - 4, center + half + dmax + 4}) {
            if (element(m) != newton_eval(m)) {
                res.detail = "window does not extend polynomially";
                return res;
            }
        }
    } catch (const std::runtime_error&) {
        res.detail = "insufficient cutoff headroom for the spot checks";
        return res;
    }

    // Delta^N v = 0 globally iff the Newton coefficients vanish from N on.
    int order = 0;
    for (size_t j = 0; j < newton.size(); ++j)
        if (!newton[j].is_zero()) order = static_cast<int>(j) + 1;
    if (order > ceiling) {
        res.detail = "no locality order below ceiling " + std::to_string(ceiling);
        return res;
    }
    res.order = order;
    res.determined = true;
    return res;
}

CheckReport virasoro_check(EvalContext& ctx, int index_range, HalfInt max_weight) {
    CheckReport rep;
    rep.suite = "virasoro";
    const VosaModel& model = ctx.model();
    const Rational& c = model.central_charge();
    for (const auto& b : model.basis()) {
        if (b.weight > max_weight) continue;
        StateVector bv = StateVector::basis(b);
        for (int m = -index_range; m <= index_range; ++m) {
            for (int n = -index_range; n <= index_range; ++n) {
                StateVector lhs =
                    ctx.virasoro(m, ctx.virasoro(n, bv)) - ctx.virasoro(n, ctx.virasoro(m, bv));
                StateVector rhs = ctx.virasoro(m + n, bv);
                rhs *= QQi(Rational(m - n));
                if (m + n == 0) {
                    StateVector central = bv;
                    central *= QQi(c / 12 * (Rational(m) * m * m - m));
                    rhs += central;
                }
                StateVector residual = lhs - rhs;
                std::ostringstream id;
                id << "[L" << m << ",L" << n << "] " << basis_state_str(b, model);
                if (residual.truncated) {
                    CheckRecord r;
                    r.id = id.str();
                    r.identity = "virasoro-relations";
                    r.verdict = Verdict::inconclusive;
                    r.note = "insufficient cutoff headroom";
                    rep.add(std::move(r));
                } else {
                    rep.add(CheckRecord::exact_zero(id.str(), "virasoro-relations",
                                                    basis_state_str(b, model),
                                                    residual.is_zero(),
                                                    residual_string(residual)));
                }
            }
        }
    }
    return rep;
}

namespace {

void relation_record(CheckReport& rep, const VosaModel& model, const std::string& id,
                     const char* identity, const BasisState& b, const StateVector& residual) {
    if (residual.truncated) {
        CheckRecord r;
        r.id = id;
        r.identity = identity;
        r.inputs = basis_state_str(b, model);
        r.verdict = Verdict::inconclusive;
        r.note = "insufficient cutoff headroom";
        rep.add(std::move(r));
    } else {
        rep.add(CheckRecord::exact_zero(id, identity, basis_state_str(b, model),
                                        residual.is_zero(), residual_string(residual)));
    }
}

}  // namespace

CheckReport superalgebra_check(EvalContext& ctx, int index_range, HalfInt max_weight) {
    CheckReport rep;
    rep.suite = "superalgebra";
    const VosaModel& model = ctx.model();
    const Rational& c = model.central_charge();
    const std::string kind = model.kind();

    auto mode_of = [&](const StateVector& st, HalfInt idx, const StateVector& v) {
        return ctx.apply_phys(st, idx, v);
    };

    std::vector<HalfInt> ints, halves;
    for (int t = -index_range; t <= index_range; ++t) ints.push_back(HalfInt::whole(t));
    for (int t = -2 * index_range + 1; t <= 2 * index_range - 1; t += 2)
        halves.push_back(HalfInt::half(t));

    if (kind.rfind("ns_verma", 0) == 0 || model.superconformal_vector().has_value()) {
        const StateVector& tau = *model.superconformal_vector();
        const StateVector& nu = model.conformal_vector();
        for (const auto& b : model.basis()) {
            if (b.weight > max_weight) continue;
            StateVector bv = StateVector::basis(b);
            for (HalfInt m : ints)
                for (HalfInt n : halves) {
                    // [L_m, G_n] = (m/2 - n) G_{m+n}
                    StateVector lhs = ctx.graded_commutator(nu, m, tau, n, bv);
                    StateVector rhs = mode_of(tau, m + n, bv);
                    rhs *= QQi(rat(m.twice, 4) - rat(n.twice, 2));
                    relation_record(rep, model,
                                    "[L" + m.str() + ",G" + n.str() + "] " +
                                        basis_state_str(b, model),
                                    "ns-relations", b, lhs - rhs);
                }
            for (HalfInt m : halves)
                for (HalfInt n : halves) {
                    if (m > n) continue;  // graded commutator symmetric here
                    StateVector lhs = ctx.graded_commutator(tau, m, tau, n, bv);
                    StateVector rhs = ctx.virasoro((m + n).twice / 2, bv);
                    rhs *= QQi(Rational(2));
                    if ((m + n) == HalfInt(0)) {
                        Rational mr = rat(m.twice, 2);
                        StateVector central = bv;
                        central *= QQi(c / 3 * (mr * mr - rat(1, 4)));
                        rhs += central;
                    }
                    relation_record(rep, model,
                                    "[G" + m.str() + ",G" + n.str() + "]+ " +
                                        basis_state_str(b, model),
                                    "ns-relations", b, lhs - rhs);
                }
        }
    }

    if (kind.rfind("n2_verma", 0) == 0) {
        const StateVector& nu = model.conformal_vector();
        StateVector jstate = StateVector::basis(model.make_state({{1, HalfInt::whole(-1)}}));
        StateVector gp = StateVector::basis(model.make_state({{2, HalfInt::half(-3)}}));
        StateVector gm = StateVector::basis(model.make_state({{3, HalfInt::half(-3)}}));
        for (const auto& b : model.basis()) {
            if (b.weight > max_weight) continue;
            StateVector bv = StateVector::basis(b);
            for (HalfInt m : ints)
                for (HalfInt n : ints) {
                    // [L_m, J_n] = -n J_{m+n}
                    StateVector lhs = ctx.graded_commutator(nu, m, jstate, n, bv);
                    StateVector rhs = mode_of(jstate, m + n, bv);
                    rhs *= QQi(rat(-n.twice, 2));
                    relation_record(rep, model,
                                    "[L" + m.str() + ",J" + n.str() + "] " +
                                        basis_state_str(b, model),
                                    "n2-relations", b, lhs - rhs);
                    // [J_m, J_n] = (c/3) m delta
                    StateVector lhs2 = ctx.graded_commutator(jstate, m, jstate, n, bv);
                    StateVector rhs2;
                    if ((m + n) == HalfInt(0)) {
                        rhs2 = bv;
                        rhs2 *= QQi(c / 3 * rat(m.twice, 2));
                    }
                    relation_record(rep, model,
                                    "[J" + m.str() + ",J" + n.str() + "] " +
                                        basis_state_str(b, model),
                                    "n2-relations", b, lhs2 - rhs2);
                }
            for (HalfInt m : ints)
                for (HalfInt n : halves) {
                    // [L_m, G+-_n] and [G+-_n, J_m]
                    for (int which = 0; which < 2; ++which) {
                        const StateVector& g = which == 0 ? gp : gm;
                        const char* gname = which == 0 ? "G+" : "G-";
                        StateVector lhs = ctx.graded_commutator(nu, m, g, n, bv);
                        StateVector rhs = mode_of(g, m + n, bv);
                        rhs *= QQi(rat(m.twice, 4) - rat(n.twice, 2));
                        relation_record(rep, model,
                                        std::string("[L") + m.str() + "," + gname + n.str() +
                                            "] " + basis_state_str(b, model),
                                        "n2-relations", b, lhs - rhs);
                        StateVector lhs2 = ctx.graded_commutator(g, n, jstate, m, bv);
                        StateVector rhs2 = mode_of(g, m + n, bv);
                        rhs2 *= QQi(Rational(which == 0 ? -1 : 1));
                        relation_record(rep, model,
                                        std::string("[") + gname + n.str() + ",J" + m.str() +
                                            "] " + basis_state_str(b, model),
                                        "n2-relations", b, lhs2 - rhs2);
                    }
                }
            for (HalfInt m : halves)
                for (HalfInt n : halves) {
                    // [G+_m, G-_n] = 2L_{m+n} + (m-n)J_{m+n} + (c/3)(m^2-1/4) delta
                    StateVector lhs = ctx.graded_commutator(gp, m, gm, n, bv);
                    StateVector rhs = ctx.virasoro((m + n).twice / 2, bv);
                    rhs *= QQi(Rational(2));
                    StateVector jpart = mode_of(jstate, m + n, bv);
                    jpart *= QQi(rat(m.twice - n.twice, 2));
                    rhs += jpart;
                    if ((m + n) == HalfInt(0)) {
                        Rational mr = rat(m.twice, 2);
                        StateVector central = bv;
                        central *= QQi(c / 3 * (mr * mr - rat(1, 4)));
                        rhs += central;
                    }
                    relation_record(rep, model,
                                    "[G+" + m.str() + ",G-" + n.str() + "]+ " +
                                        basis_state_str(b, model),
                                    "n2-relations", b, lhs - rhs);
                    if (m <= n) {
                        StateVector pp = ctx.graded_commutator(gp, m, gp, n, bv);
                        relation_record(rep, model,
                                        "[G+" + m.str() + ",G+" + n.str() + "]+ " +
                                            basis_state_str(b, model),
                                        "n2-relations", b, pp);
                        StateVector mm = ctx.graded_commutator(gm, m, gm, n, bv);
                        relation_record(rep, model,
                                        "[G-" + m.str() + ",G-" + n.str() + "]+ " +
                                            basis_state_str(b, model),
                                        "n2-relations", b, mm);
                    }
                }
        }
    }
    return rep;
}

CheckReport translation_check(EvalContext& ctx, const StateVector& a, int n_range,
                              const std::string& label) {
    CheckReport rep;
    rep.suite = "translation";
    const VosaModel& model = ctx.model();
    for (const auto& b : model.basis()) {
        if (b.weight + HalfInt::whole(2) > model.cutoff()) continue;
        StateVector bv = StateVector::basis(b);
        for (int n = -n_range; n <= n_range; ++n) {
            StateVector lhs =
                ctx.virasoro(-1, ctx.apply_mode(a, n, bv)) - ctx.apply_mode(a, n, ctx.virasoro(-1, bv));
            StateVector rhs = ctx.apply_mode(a, n - 1, bv);
            rhs *= QQi(Rational(-n));
            StateVector residual = lhs - rhs;
            std::ostringstream id;
            id << "[T,a(" << n << ")] " << basis_state_str(b, model);
            if (!label.empty()) id << " " << label;
            if (residual.truncated) {
                CheckRecord r;
                r.id = id.str();
                r.identity = "translation-covariance";
                r.verdict = Verdict::inconclusive;
                r.note = "insufficient cutoff headroom";
                rep.add(std::move(r));
            } else {
                rep.add(CheckRecord::exact_zero(id.str(), "translation-covariance",
                                                basis_state_str(b, model), residual.is_zero(),
                                                residual_string(residual)));
            }
        }
    }
    return rep;
}

}  // namespace vosa
