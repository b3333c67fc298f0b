#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nlohmann/json_fwd.hpp"
#include "vosa/state.hpp"

namespace vosa {

// Sign (-1)^{2d^2+d} for d in (1/2)Z. With d = t/2 the exponent is the
// integer t(t+1)/2.
inline int weight_sign(HalfInt d) {
    int64_t t = d.twice;
    return (t * (t + 1) / 2) % 2 == 0 ? 1 : -1;
}

// A unitary VOSA on a truncated graded space. Concrete models supply the
// generator mode action; everything else (derived modes, forms, smearing)
// is built on top of it. Instances are immutable after construction and
// safe to share across threads.
class VosaModel {
public:
    struct Generator {
        std::string name;
        HalfInt weight;
        Parity parity = Parity::even;
        // PCT image theta(g) = pct_sign * generator(pct_image). The default
        // makes every declared generator field Hermitian.
        GenId pct_image = 0;
        int pct_sign = 1;
    };

    virtual ~VosaModel() = default;

    const std::string& kind() const { return kind_; }
    const std::vector<Generator>& generators() const { return gens_; }
    const Generator& generator(GenId g) const { return gens_.at(g); }
    HalfInt cutoff() const { return cutoff_; }
    const Rational& central_charge() const { return central_charge_; }
    const StateVector& conformal_vector() const { return nu_; }
    const std::optional<StateVector>& superconformal_vector() const { return tau_; }

    // g_n applied to a canonical basis state, n in the weight-shifted
    // indexing (g_n shifts weight by -n). Exact; quotient models flag
    // results they cannot represent.
    virtual StateVector apply_generator(GenId g, HalfInt n, const BasisState& b) const = 0;

    StateVector apply_generator(GenId g, HalfInt n, const StateVector& v) const;

    // Hermitian adjoint table: g_n^+ = sign * (gen)_{-n}. Derived from the
    // PCT data; +1 and the generator itself for all built-in models.
    struct AdjointRule {
        GenId gen;
        int sign;
    };
    AdjointRule adjoint_rule(GenId g) const;

    // n is a creation index for g iff n <= -d_g and n = -d_g (mod 1).
    bool is_creation_index(GenId g, HalfInt n) const;

    // Canonical basis of all states of weight <= cutoff, ordered
    // weight-major. Populated at construction.
    const std::vector<BasisState>& basis() const { return basis_; }
    std::vector<BasisState> basis_at(HalfInt w) const;

    struct GradedDim {
        HalfInt weight;
        size_t dim_even = 0;
        size_t dim_odd = 0;
        size_t dim() const { return dim_even + dim_odd; }
    };
    std::vector<GradedDim> graded_dimensions() const;

    BasisState vacuum() const { return BasisState{}; }

    // Builds the canonical label for a creation-mode sequence already in
    // canonical order. Throws std::domain_error if it is not canonical.
    BasisState make_state(const std::vector<Mode>& factors) const;

    virtual nlohmann::json descriptor() const = 0;
    // FNV-1a hash of the canonical descriptor text.
    std::string fingerprint() const;

protected:
    VosaModel(std::string kind, HalfInt cutoff) : kind_(std::move(kind)), cutoff_(cutoff) {}

    // Enumerates every canonical monomial of weight <= cutoff over the
    // declared alphabet (even generators may repeat, odd may not).
    void enumerate_basis();
    void set_basis(std::vector<BasisState> basis);
    void set_default_pct();

    std::string kind_;
    HalfInt cutoff_;
    Rational central_charge_ = 0;
    std::vector<Generator> gens_;
    StateVector nu_;
    std::optional<StateVector> tau_;

private:
    std::vector<BasisState> basis_;
};

using ModelPtr = std::shared_ptr<const VosaModel>;

// True iff the truncated basis has no negative weights and the weight-0
// component is spanned by the vacuum alone.
struct CftTypeReport {
    bool is_cft_type = false;
    std::string detail;
};
CftTypeReport cft_type_check(const VosaModel& model);

// PCT candidate: an antilinear involution given by a signed generator
// permutation, extended to monomials factorwise with coefficient
// conjugation. The extension may require re-straightening, so it goes
// through the model's mode action.
class PctCandidate {
public:
    explicit PctCandidate(const VosaModel& model);
    StateVector apply(const StateVector& v) const;
    StateVector apply(const BasisState& b) const;

private:
    const VosaModel& model_;
};

}  // namespace vosa
