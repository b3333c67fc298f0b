#include <stdexcept>

#include "nlohmann/json.hpp"
#include "vosa/models.hpp"

namespace vosa {

namespace {

// CAR algebra on `copies` odd weight-1/2 generators:
// [phi^i_n, phi^j_m]_+ = delta_ij delta_{n,-m}. Distinct generators
// anticommute exactly, so the canonical label order is the operator order.
class FreeFermionModel : public VosaModel {
public:
    FreeFermionModel(int copies, HalfInt cutoff)
        : VosaModel(copies == 1 ? "free_fermion" : "free_fermions", cutoff), copies_(copies) {
        if (copies < 1) throw std::invalid_argument("need at least one fermion");
        for (int j = 0; j < copies; ++j) {
            Generator g;
            g.name = copies == 1 ? "phi" : "phi" + std::to_string(j + 1);
            g.weight = HalfInt::half(1);
            g.parity = Parity::odd;
            gens_.push_back(g);
        }
        set_default_pct();
        central_charge_ = rat(copies, 2);

        // nu = 1/2 sum_j phi^j(-3/2) phi^j(-1/2) |0>
        for (GenId j = 0; j < gens_.size(); ++j) {
            std::vector<Mode> f{{j, HalfInt::half(-3)}, {j, HalfInt::half(-1)}};
            nu_.add_term(make_state(f), QQi(rat(1, 2)));
        }
        enumerate_basis();
    }

    using VosaModel::apply_generator;

    StateVector apply_generator(GenId g, HalfInt n, const BasisState& b) const override {
        StateVector out;
        const auto& f = b.factors;
        Mode mode{g, n};
        if (is_creation_index(g, n)) {
            int sign = 1;
            size_t pos = 0;
            while (pos < f.size() && f[pos] < mode) {
                sign = -sign;
                ++pos;
            }
            if (pos < f.size() && f[pos] == mode) return out;  // Pauli rule
            BasisState nb;
            nb.factors = f;
            nb.factors.insert(nb.factors.begin() + pos, mode);
            nb.weight = b.weight - n;
            nb.parity = b.parity + Parity::odd;
            out.add_term(nb, QQi(sign));
            return out;
        }
        // Annihilation: anticommute rightwards; only the matching factor
        // phi^g_{-n} survives the delta.
        Mode partner{g, -n};
        int sign = 1;
        for (size_t pos = 0; pos < f.size(); ++pos) {
            if (f[pos] == partner) {
                BasisState nb;
                nb.factors = f;
                nb.factors.erase(nb.factors.begin() + pos);
                nb.weight = b.weight - n;
                nb.parity = b.parity + Parity::odd;
                out.add_term(nb, QQi(sign));
                return out;
            }
            sign = -sign;
        }
        return out;
    }

    nlohmann::json descriptor() const override {
        nlohmann::json j;
        j["kind"] = kind_;
        if (copies_ != 1) j["copies"] = copies_;
        j["cutoff"] = cutoff_.str();
        nlohmann::json table = nlohmann::json::array();
        for (const auto& g : gens_)
            table.push_back({{"name", g.name}, {"weight", g.weight.str()},
                             {"parity", parity_name(g.parity)}});
        j["generators"] = table;
        return j;
    }

private:
    int copies_;
};

}  // namespace

ModelPtr build_free_fermion(HalfInt cutoff) {
    return std::make_shared<FreeFermionModel>(1, cutoff);
}

ModelPtr build_free_fermions(int copies, HalfInt cutoff) {
    return std::make_shared<FreeFermionModel>(copies, cutoff);
}

}  // namespace vosa
