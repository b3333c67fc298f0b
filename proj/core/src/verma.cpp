#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "nlohmann/json.hpp"
#include "vosa/models.hpp"
#include "vosa/unitarity.hpp"

namespace vosa {

const char* algebra_kind_name(AlgebraKind k) {
    switch (k) {
        case AlgebraKind::virasoro: return "virasoro";
        case AlgebraKind::ns: return "ns";
        case AlgebraKind::n2: return "n2";
    }
    return "?";
}

Rational ns_unitary_series(long m) {
    return rat(3, 2) * (1 - rat(8, m * (m + 2)));
}

bool ns_unitary_admissible(const Rational& c) {
    if (c >= rat(3, 2)) return true;
    for (long m = 3; m <= 4096; ++m)
        if (c == ns_unitary_series(m)) return true;
    return false;
}

Rational n2_unitary_series(long n) { return rat(3 * n, n + 2); }

bool n2_unitary_admissible(const Rational& c) {
    if (c >= 3) return true;
    for (long n = 1; n <= 4096; ++n)
        if (c == n2_unitary_series(n)) return true;
    return false;
}

namespace {

Rational half_to_rational(HalfInt h) { return rat(h.twice, 2); }

// Generator ids per algebra kind.
constexpr GenId kL = 0;
constexpr GenId kG = 1;   // ns
constexpr GenId kJ = 1;   // n2
constexpr GenId kGp = 2;  // n2
constexpr GenId kGm = 3;  // n2

// Vacuum Verma module with annihilation-mode action by relation rewriting:
// out-of-order factors are commuted rightward through the bracket table
// until everything acts on the vacuum.
class VermaModel : public VosaModel {
public:
    VermaModel(const VermaSpec& spec)
        : VosaModel(std::string(algebra_kind_name(spec.kind)) + "_verma", spec.cutoff),
          algebra_(spec.kind) {
        central_charge_ = spec.central_charge;
        auto add_gen = [this](const char* name, HalfInt w, Parity p) {
            Generator g;
            g.name = name;
            g.weight = w;
            g.parity = p;
            gens_.push_back(g);
        };
        switch (algebra_) {
            case AlgebraKind::virasoro:
                add_gen("L", HalfInt::whole(2), Parity::even);
                break;
            case AlgebraKind::ns:
                add_gen("L", HalfInt::whole(2), Parity::even);
                add_gen("G", HalfInt::half(3), Parity::odd);
                break;
            case AlgebraKind::n2:
                add_gen("L", HalfInt::whole(2), Parity::even);
                add_gen("J", HalfInt::whole(1), Parity::even);
                add_gen("G+", HalfInt::half(3), Parity::odd);
                add_gen("G-", HalfInt::half(3), Parity::odd);
                break;
        }
        set_default_pct();
        if (algebra_ == AlgebraKind::n2) {
            gens_[kGp].pct_image = kGm;
            gens_[kGp].pct_sign = 1;
            gens_[kGm].pct_image = kGp;
            gens_[kGm].pct_sign = 1;
        }

        nu_ = StateVector::basis(make_state({{kL, HalfInt::whole(-2)}}));
        if (algebra_ == AlgebraKind::ns)
            tau_ = StateVector::basis(make_state({{kG, HalfInt::half(-3)}}));
        enumerate_basis();
    }

    AlgebraKind algebra() const { return algebra_; }

    using VosaModel::apply_generator;

    StateVector apply_generator(GenId g, HalfInt n, const BasisState& b) const override {
        if (g >= gens_.size()) throw std::out_of_range("unknown generator id");
        // Modes of the wrong half-integer congruence vanish identically.
        if ((n.twice - gens_[g].weight.twice) % 2 != 0) return {};

        uint64_t key = (static_cast<uint64_t>(g) << 33) ^
                       static_cast<uint64_t>(static_cast<uint32_t>(n.twice));
        {
            std::lock_guard<std::mutex> lock(cache_mutex_);
            auto it = cache_.find(b);
            if (it != cache_.end()) {
                auto jt = it->second.find(key);
                if (jt != it->second.end()) return jt->second;
            }
        }
        StateVector result = straighten(g, n, b);
        {
            std::lock_guard<std::mutex> lock(cache_mutex_);
            cache_[b][key] = result;
        }
        return result;
    }

    nlohmann::json descriptor() const override {
        nlohmann::json j;
        j["kind"] = kind_;
        j["c"] = central_charge_.get_str();
        j["cutoff"] = cutoff_.str();
        j["quotient"] = false;
        nlohmann::json table = nlohmann::json::array();
        for (const auto& g : gens_)
            table.push_back({{"name", g.name}, {"weight", g.weight.str()},
                             {"parity", parity_name(g.parity)}});
        j["generators"] = table;
        return j;
    }

private:
    struct BracketTerm {
        GenId gen;
        Rational coeff;
    };

    // Graded bracket [a_m, b_n] = sum coeff (gen)_{m+n} + central delta_{m,-n}.
    void bracket(GenId a, HalfInt mh, GenId b, HalfInt nh, std::vector<BracketTerm>& lin,
                 Rational& central) const {
        lin.clear();
        central = 0;
        Rational m = half_to_rational(mh), n = half_to_rational(nh);
        bool diagonal = (mh + nh) == HalfInt(0);
        const Rational& c = central_charge_;

        auto ll = [&] {
            lin.push_back({kL, m - n});
            if (diagonal) central = c / 12 * (m * m * m - m);
        };
        auto lg = [&](GenId gg) { lin.push_back({gg, m / 2 - n}); };
        auto gl = [&](GenId gg) { lin.push_back({gg, m - n / 2}); };

        switch (algebra_) {
            case AlgebraKind::virasoro:
                ll();
                return;
            case AlgebraKind::ns:
                if (a == kL && b == kL) {
                    ll();
                } else if (a == kL && b == kG) {
                    lg(kG);
                } else if (a == kG && b == kL) {
                    gl(kG);
                } else {  // G G
                    lin.push_back({kL, 2});
                    if (diagonal) central = c / 3 * (m * m - rat(1, 4));
                }
                return;
            case AlgebraKind::n2:
                if (a == kL && b == kL) {
                    ll();
                } else if (a == kL && b == kJ) {
                    lin.push_back({kJ, -n});
                } else if (a == kJ && b == kL) {
                    lin.push_back({kJ, m});
                } else if (a == kL && (b == kGp || b == kGm)) {
                    lg(b);
                } else if ((a == kGp || a == kGm) && b == kL) {
                    gl(a);
                } else if (a == kJ && b == kJ) {
                    if (diagonal) central = c / 3 * m;
                } else if (a == kJ && (b == kGp || b == kGm)) {
                    // [J_m, G+-_n] = +-G+-_{m+n}
                    lin.push_back({b, b == kGp ? Rational(1) : Rational(-1)});
                } else if ((a == kGp || a == kGm) && b == kJ) {
                    lin.push_back({a, a == kGp ? Rational(-1) : Rational(1)});
                } else if (a == kGp && b == kGm) {
                    lin.push_back({kL, 2});
                    lin.push_back({kJ, m - n});
                    if (diagonal) central = c / 3 * (m * m - rat(1, 4));
                } else if (a == kGm && b == kGp) {
                    lin.push_back({kL, 2});
                    lin.push_back({kJ, n - m});
                    if (diagonal) central = c / 3 * (m * m - rat(1, 4));
                }
                // G+G+ and G-G- anticommute to zero.
                return;
        }
    }

    StateVector bracket_action(GenId a, HalfInt m, GenId b, HalfInt n,
                               const BasisState& rest) const {
        std::vector<BracketTerm> lin;
        Rational central;
        bracket(a, m, b, n, lin, central);
        StateVector out;
        for (const auto& term : lin) {
            if (term.coeff == 0) continue;
            StateVector part = apply_generator(term.gen, m + n, rest);
            out.truncated = out.truncated || part.truncated;
            for (const auto& [pb, pc] : part.terms) out.add_term(pb, pc * QQi(term.coeff));
        }
        if (central != 0) out.add_term(rest, QQi(central));
        return out;
    }

    StateVector straighten(GenId g, HalfInt n, const BasisState& b) const {
        const Generator& gen = gens_[g];
        if (b.is_vacuum()) {
            StateVector out;
            if (n <= -gen.weight) {
                BasisState nb;
                nb.factors = {{g, n}};
                nb.weight = -n;
                nb.parity = gen.parity;
                out.add_term(nb, QQi(1));
            }
            return out;
        }

        Mode f1 = b.factors.front();
        BasisState rest;
        rest.factors.assign(b.factors.begin() + 1, b.factors.end());
        rest.weight = b.weight + f1.index;
        rest.parity = b.parity + gens_[f1.gen].parity;

        Mode mode{g, n};
        bool creation = n <= -gen.weight;

        if (creation && (mode < f1 || (mode == f1 && gen.parity == Parity::even))) {
            BasisState nb;
            nb.factors.reserve(b.factors.size() + 1);
            nb.factors.push_back(mode);
            nb.factors.insert(nb.factors.end(), b.factors.begin(), b.factors.end());
            nb.weight = b.weight - n;
            nb.parity = b.parity + gen.parity;
            StateVector out;
            out.add_term(nb, QQi(1));
            return out;
        }

        if (mode == f1 && gen.parity == Parity::odd) {
            // g_n g_n = (1/2)[g_n, g_n]_+
            StateVector half = bracket_action(g, n, g, n, rest);
            half *= QQi(rat(1, 2));
            return half;
        }

        // Swap past the outermost factor and add the bracket.
        int sign = koszul(gen.parity, gens_[f1.gen].parity);
        StateVector inner = apply_generator(g, n, rest);
        StateVector swapped = apply_generator(f1.gen, f1.index, inner);
        if (sign < 0) swapped *= QQi(-1);
        return swapped + bracket_action(g, n, f1.gen, f1.index, rest);
    }

    AlgebraKind algebra_;
    mutable std::mutex cache_mutex_;
    mutable std::unordered_map<BasisState, std::unordered_map<uint64_t, StateVector>> cache_;
};

// Quotient of a Verma model by the radical of the invariant scalar product.
// The surviving basis is the graded-lex pivot subset; every Verma monomial
// of weight <= cutoff reduces to a combination of pivots.
class QuotientModel : public VosaModel {
public:
    explicit QuotientModel(ModelPtr verma)
        : VosaModel(verma->kind(), verma->cutoff()), verma_(std::move(verma)) {
        gens_ = verma_->generators();
        central_charge_ = verma_->central_charge();

        std::vector<BasisState> pivot_states;
        for (int32_t t = 0; t <= cutoff_.twice; ++t) {
            HalfInt w(t);
            std::vector<BasisState> states = verma_->basis_at(w);
            if (states.empty()) continue;
            GramMatrix gram = gram_matrix(*verma_, w);
            Rref rref = reduced_row_echelon(gram.real_entries());

            for (size_t col = 0; col < states.size(); ++col) {
                auto pivot_row = rref.pivot_row_of_column(col);
                if (pivot_row.has_value()) {
                    pivot_states.push_back(states[col]);
                    reduction_[states[col]] = StateVector::basis(states[col]);
                } else {
                    // Column col of the Gram matrix is a combination of the
                    // pivot columns; the same coefficients reduce the state
                    // modulo the radical.
                    StateVector red;
                    for (size_t r = 0; r < rref.pivot_columns.size(); ++r) {
                        const Rational& coeff = rref.matrix[r][col];
                        if (coeff != 0)
                            red.add_term(states[rref.pivot_columns[r]], QQi(coeff));
                    }
                    reduction_[states[col]] = std::move(red);
                }
            }
        }
        set_basis(std::move(pivot_states));

        nu_ = reduce(verma_->conformal_vector());
        if (verma_->superconformal_vector()) tau_ = reduce(*verma_->superconformal_vector());
    }

    using VosaModel::apply_generator;

    StateVector apply_generator(GenId g, HalfInt n, const BasisState& b) const override {
        StateVector raw = verma_->apply_generator(g, n, b);
        return reduce(raw);
    }

    StateVector reduce(const StateVector& raw) const {
        StateVector out;
        out.truncated = raw.truncated;
        for (const auto& [rb, rc] : raw.terms) {
            if (rb.weight > cutoff_) {
                out.truncated = true;
                continue;
            }
            auto it = reduction_.find(rb);
            if (it == reduction_.end())
                throw std::logic_error("quotient reduction missing for weight " +
                                       rb.weight.str());
            for (const auto& [pb, pc] : it->second.terms) out.add_term(pb, rc * pc);
        }
        return out;
    }

    nlohmann::json descriptor() const override {
        nlohmann::json j = verma_->descriptor();
        j["quotient"] = true;
        return j;
    }

private:
    ModelPtr verma_;
    std::unordered_map<BasisState, StateVector> reduction_;
};

}  // namespace

ModelPtr build_verma(const VermaSpec& spec) { return std::make_shared<VermaModel>(spec); }

ModelPtr quotient_by_nullspace(ModelPtr verma) {
    auto vm = std::dynamic_pointer_cast<const VermaModel>(verma);
    if (!vm) throw std::invalid_argument("quotient_by_nullspace expects a Verma model");
    const Rational& c = vm->central_charge();
    bool ok = true;
    switch (vm->algebra()) {
        case AlgebraKind::ns: ok = ns_unitary_admissible(c); break;
        case AlgebraKind::n2: ok = n2_unitary_admissible(c); break;
        case AlgebraKind::virasoro: ok = true; break;
    }
    if (!ok)
        throw std::domain_error("central charge " + c.get_str() +
                                " is not in the unitary range for " + vm->kind());
    return std::make_shared<QuotientModel>(std::move(verma));
}

ModelPtr build_from_descriptor(const nlohmann::json& d) {
    if (!d.contains("kind")) throw std::invalid_argument("descriptor missing 'kind'");
    std::string kind = d.at("kind").get<std::string>();
    auto cutoff_of = [&d]() { return HalfInt::parse(d.at("cutoff").get<std::string>()); };

    if (kind == "free_fermion") return build_free_fermion(cutoff_of());
    if (kind == "free_fermions")
        return build_free_fermions(d.value("copies", 2), cutoff_of());
    if (kind == "graded_tensor") {
        const auto& factors = d.at("factors");
        if (!factors.is_array() || factors.size() != 2)
            throw std::invalid_argument("graded_tensor needs exactly two factors");
        return build_graded_tensor(build_from_descriptor(factors[0]),
                                   build_from_descriptor(factors[1]));
    }
    AlgebraKind algebra;
    if (kind == "virasoro_verma")
        algebra = AlgebraKind::virasoro;
    else if (kind == "ns_verma")
        algebra = AlgebraKind::ns;
    else if (kind == "n2_verma")
        algebra = AlgebraKind::n2;
    else
        throw std::invalid_argument("unsupported model kind '" + kind + "'");

    VermaSpec spec;
    spec.kind = algebra;
    spec.central_charge = parse_rational(d.at("c").get<std::string>());
    spec.cutoff = cutoff_of();
    ModelPtr verma = build_verma(spec);
    if (d.value("quotient", false)) return quotient_by_nullspace(verma);
    return verma;
}

}  // namespace vosa
