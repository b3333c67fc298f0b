#include "vosa/model.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "nlohmann/json.hpp"

namespace vosa {

StateVector VosaModel::apply_generator(GenId g, HalfInt n, const StateVector& v) const {
    StateVector out;
    out.truncated = v.truncated;
    for (const auto& [b, coeff] : v.terms) {
        StateVector part = apply_generator(g, n, b);
        out.truncated = out.truncated || part.truncated;
        for (const auto& [pb, pc] : part.terms) out.add_term(pb, coeff * pc);
    }
    return out;
}

VosaModel::AdjointRule VosaModel::adjoint_rule(GenId g) const {
    const Generator& gen = generator(g);
    return AdjointRule{gen.pct_image, weight_sign(gen.weight) * gen.pct_sign};
}

bool VosaModel::is_creation_index(GenId g, HalfInt n) const {
    const Generator& gen = generator(g);
    if (n > -gen.weight) return false;
    return (n.twice - gen.weight.twice) % 2 == 0;
}

std::vector<BasisState> VosaModel::basis_at(HalfInt w) const {
    std::vector<BasisState> out;
    for (const auto& b : basis_)
        if (b.weight == w) out.push_back(b);
    return out;
}

std::vector<VosaModel::GradedDim> VosaModel::graded_dimensions() const {
    std::vector<GradedDim> dims;
    for (int32_t t = 0; t <= cutoff_.twice; ++t) {
        GradedDim d{HalfInt(t), 0, 0};
        dims.push_back(d);
    }
    for (const auto& b : basis_) {
        auto& d = dims.at(b.weight.twice);
        if (b.parity == Parity::even)
            ++d.dim_even;
        else
            ++d.dim_odd;
    }
    return dims;
}

BasisState VosaModel::make_state(const std::vector<Mode>& factors) const {
    BasisState b;
    b.factors = factors;
    HalfInt w(0);
    Parity p = Parity::even;
    for (size_t i = 0; i < factors.size(); ++i) {
        const Mode& m = factors[i];
        if (m.gen >= gens_.size()) throw std::out_of_range("unknown generator id");
        if (!is_creation_index(m.gen, m.index))
            throw std::domain_error("non-creation mode index in monomial");
        if (i > 0) {
            const Mode& prev = factors[i - 1];
            bool ok = prev < m || (prev == m && generator(m.gen).parity == Parity::even);
            if (!ok) throw std::domain_error("monomial factors not in canonical order");
        }
        w += -m.index;
        p = p + generator(m.gen).parity;
    }
    b.weight = w;
    b.parity = p;
    return b;
}

void VosaModel::enumerate_basis() {
    std::vector<BasisState> out;
    std::vector<Mode> stack;

    // Factors are chosen in ascending display order: each new factor must be
    // >= the last one (strictly greater for a repeated odd factor), and it
    // is appended on the inner side.
    auto rec = [&](auto&& self, HalfInt budget) -> void {
        BasisState b;
        b.factors = stack;
        b.weight = cutoff_ - budget;
        Parity p = Parity::even;
        for (const Mode& m : stack) p = p + generator(m.gen).parity;
        b.parity = p;
        out.push_back(std::move(b));

        for (GenId g = 0; g < gens_.size(); ++g) {
            if (!stack.empty() && g < stack.back().gen) continue;
            const Generator& gen = gens_[g];
            for (HalfInt n = -gen.weight; -n <= budget; n -= HalfInt::whole(1)) {
                Mode m{g, n};
                if (!stack.empty()) {
                    const Mode& prev = stack.back();
                    if (m < prev) continue;
                    if (m == prev && gen.parity == Parity::odd) continue;
                }
                stack.push_back(m);
                self(self, budget + n);
                stack.pop_back();
            }
        }
    };
    rec(rec, cutoff_);
    std::sort(out.begin(), out.end());
    basis_ = std::move(out);
}

void VosaModel::set_basis(std::vector<BasisState> basis) {
    std::sort(basis.begin(), basis.end());
    basis_ = std::move(basis);
}

void VosaModel::set_default_pct() {
    for (GenId g = 0; g < gens_.size(); ++g) {
        gens_[g].pct_image = g;
        gens_[g].pct_sign = weight_sign(gens_[g].weight);
    }
}

std::string VosaModel::fingerprint() const {
    std::string text = descriptor().dump();
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

std::string basis_state_str(const BasisState& b, const VosaModel& model) {
    if (b.is_vacuum()) return "|0>";
    std::ostringstream os;
    for (const Mode& m : b.factors)
        os << model.generator(m.gen).name << "(" << m.index.str() << ")";
    os << "|0>";
    return os.str();
}

CftTypeReport cft_type_check(const VosaModel& model) {
    CftTypeReport rep;
    size_t dim0 = 0;
    for (const auto& b : model.basis()) {
        if (b.weight < HalfInt(0)) {
            rep.detail = "negative-weight state " + basis_state_str(b, model);
            return rep;
        }
        if (b.weight == HalfInt(0)) ++dim0;
    }
    for (const auto& g : model.generators()) {
        if (g.weight <= HalfInt(0)) {
            rep.detail = "generator " + g.name + " has non-positive weight";
            return rep;
        }
    }
    if (dim0 != 1) {
        rep.detail = "weight-0 space has dimension " + std::to_string(dim0);
        return rep;
    }
    rep.is_cft_type = true;
    rep.detail = "non-negative grading with one-dimensional vacuum space";
    return rep;
}

PctCandidate::PctCandidate(const VosaModel& model) : model_(model) {}

StateVector PctCandidate::apply(const BasisState& b) const {
    StateVector out = StateVector::basis(model_.vacuum());
    // theta is a homomorphism: apply the mapped generator modes innermost
    // first. Generator permutations (e.g. a swap of two odd generators) can
    // de-canonicalize the monomial, so each factor goes through the model's
    // straightening action.
    for (auto it = b.factors.rbegin(); it != b.factors.rend(); ++it) {
        const auto& gen = model_.generator(it->gen);
        out = model_.apply_generator(gen.pct_image, it->index, out);
        if (gen.pct_sign < 0) out *= QQi(-1);
    }
    return out;
}

StateVector PctCandidate::apply(const StateVector& v) const {
    StateVector out;
    out.truncated = v.truncated;
    for (const auto& [b, c] : v.terms) {
        StateVector part = apply(b);
        out.truncated = out.truncated || part.truncated;
        for (const auto& [pb, pc] : part.terms) out.add_term(pb, c.conj() * pc);
    }
    return out;
}

}  // namespace vosa
