#include <stdexcept>

#include "nlohmann/json.hpp"
#include "vosa/models.hpp"

namespace vosa {

namespace {

// Graded tensor product: the right factor's modes pick up the Koszul sign
// of the left part they cross, per Y(a1,z) Gamma^{p(a2)} (x) Y(a2,z).
// Basis states are flat monomials over the concatenated alphabet; the
// id-major canonical order makes left factors precede right factors.
class TensorModel : public VosaModel {
public:
    TensorModel(ModelPtr m1, ModelPtr m2)
        : VosaModel("graded_tensor", std::min(m1->cutoff(), m2->cutoff())),
          m1_(std::move(m1)),
          m2_(std::move(m2)),
          offset_(static_cast<GenId>(m1_->generators().size())) {
        for (const auto& g : m1_->generators()) gens_.push_back(g);
        for (const auto& g : m2_->generators()) {
            Generator lifted = g;
            lifted.pct_image = static_cast<GenId>(lifted.pct_image + offset_);
            gens_.push_back(lifted);
        }
        for (GenId g = 0; g < offset_; ++g) gens_[g].pct_image = m1_->generators()[g].pct_image;

        central_charge_ = m1_->central_charge() + m2_->central_charge();
        nu_ = lift(m1_->conformal_vector(), 0) + lift(m2_->conformal_vector(), offset_);

        std::vector<BasisState> basis;
        for (const auto& b1 : m1_->basis()) {
            if (b1.weight > cutoff_) continue;
            for (const auto& b2 : m2_->basis()) {
                if (b1.weight + b2.weight > cutoff_) continue;
                basis.push_back(combine(b1, b2));
            }
        }
        set_basis(std::move(basis));
    }

    using VosaModel::apply_generator;

    StateVector apply_generator(GenId g, HalfInt n, const BasisState& b) const override {
        auto [left, right] = split(b);
        StateVector out;
        if (g < offset_) {
            StateVector part = m1_->apply_generator(g, n, left);
            out.truncated = part.truncated;
            for (const auto& [pb, pc] : part.terms) out.add_term(combine(pb, right), pc);
        } else {
            int sign = left.parity == Parity::odd && gens_[g].parity == Parity::odd ? -1 : 1;
            StateVector part = m2_->apply_generator(static_cast<GenId>(g - offset_), n, right);
            out.truncated = part.truncated;
            for (const auto& [pb, pc] : part.terms)
                out.add_term(combine(left, pb), pc * QQi(sign));
        }
        return out;
    }

    nlohmann::json descriptor() const override {
        nlohmann::json j;
        j["kind"] = kind_;
        j["cutoff"] = cutoff_.str();
        j["factors"] = nlohmann::json::array({m1_->descriptor(), m2_->descriptor()});
        return j;
    }

private:
    BasisState combine(const BasisState& b1, const BasisState& b2) const {
        BasisState out;
        out.factors = b1.factors;
        for (Mode m : b2.factors) {
            m.gen = static_cast<GenId>(m.gen + offset_);
            out.factors.push_back(m);
        }
        out.weight = b1.weight + b2.weight;
        out.parity = b1.parity + b2.parity;
        return out;
    }

    std::pair<BasisState, BasisState> split(const BasisState& b) const {
        BasisState left, right;
        HalfInt wl(0), wr(0);
        Parity pl = Parity::even, pr = Parity::even;
        for (Mode m : b.factors) {
            if (m.gen < offset_) {
                left.factors.push_back(m);
                wl += -m.index;
                pl = pl + gens_[m.gen].parity;
            } else {
                Mode shifted = m;
                shifted.gen = static_cast<GenId>(m.gen - offset_);
                right.factors.push_back(shifted);
                wr += -m.index;
                pr = pr + gens_[m.gen].parity;
            }
        }
        left.weight = wl;
        left.parity = pl;
        right.weight = wr;
        right.parity = pr;
        return {left, right};
    }

    StateVector lift(const StateVector& v, GenId offset) const {
        StateVector out;
        for (const auto& [b, c] : v.terms) {
            BasisState nb = b;
            for (Mode& m : nb.factors) m.gen = static_cast<GenId>(m.gen + offset);
            out.add_term(nb, c);
        }
        return out;
    }

    ModelPtr m1_, m2_;
    GenId offset_;
};

}  // namespace

ModelPtr build_graded_tensor(ModelPtr m1, ModelPtr m2) {
    return std::make_shared<TensorModel>(std::move(m1), std::move(m2));
}

}  // namespace vosa
