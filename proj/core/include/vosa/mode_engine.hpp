#pragma once

#include <unordered_map>
#include <vector>

#include "vosa/model.hpp"
#include "vosa/reports.hpp"

namespace vosa {

// Derives the action of a_{(n)} for arbitrary PBW states a by rewriting the
// outermost factor through the associative formula until only generator
// rules act. One context per evaluation task: the memo table is not
// synchronized, but the underlying model is safe to share.
class EvalContext {
public:
    explicit EvalContext(const VosaModel& model, int j_ceiling = 64);

    const VosaModel& model() const { return model_; }

    // a_{(n)} c with the integer (n)-indexing.
    StateVector apply_mode(const BasisState& a, long n, const BasisState& c);
    StateVector apply_mode(const StateVector& a, long n, const StateVector& c);

    // Weight-shifted indexing a_m c, m in (1/2)Z; a may be weight-mixed
    // (each homogeneous component converts separately).
    StateVector apply_phys(const StateVector& a, HalfInt m, const StateVector& c);

    // L_k = nu_{(k+1)}.
    StateVector virasoro(long k, const StateVector& v);
    // e^{t L_{-1}}-style iterates: L_{-1}^l v / l!.
    StateVector translation_power(const StateVector& v, long l);

    // a_m b_k c - (-1)^{p(a)p(b)} b_k a_m c, weight-shifted indices,
    // parity-homogeneous a and b.
    StateVector graded_commutator(const StateVector& a, HalfInt m, const StateVector& b,
                                  HalfInt k, const StateVector& c);

    // Commutator via the j-sum of the commutator formula; avoids the deep
    // intermediate states of the two-sided product. (n)-indexing.
    StateVector commutator_formula(const StateVector& a, long m, const StateVector& b, long k,
                                   const StateVector& c);

    size_t memo_size() const { return memo_.size(); }

private:
    StateVector apply_basis(const BasisState& a, long n, const BasisState& c);
    uint32_t intern(const BasisState& b);

    const VosaModel& model_;
    int j_ceiling_;
    std::unordered_map<BasisState, uint32_t> ids_;
    struct KeyHash {
        size_t operator()(const std::tuple<uint32_t, long, uint32_t>& k) const noexcept {
            auto [a, n, c] = k;
            uint64_t h = (static_cast<uint64_t>(a) << 40) ^
                         (static_cast<uint64_t>(static_cast<uint32_t>(n)) << 20) ^ c;
            h ^= h >> 33;
            h *= 0xff51afd7ed558ccdull;
            h ^= h >> 33;
            return h;
        }
    };
    std::unordered_map<std::tuple<uint32_t, long, uint32_t>, StateVector, KeyHash> memo_;
};

HalfInt state_weight(const StateVector& v);   // throws unless weight-homogeneous
Parity state_parity(const StateVector& v);    // throws unless parity-homogeneous

// Exact L1 norm |re| + |im| summed over terms, as a reporting aid.
std::string residual_string(const StateVector& v);

// Both sides of the Borcherds identity for all (m,n,k) in the cube
// [-box_radius, box_radius]^3. Exact domain: any nonzero residual fails.
CheckReport check_borcherds(EvalContext& ctx, const StateVector& a, const StateVector& b,
                            const StateVector& c, int box_radius,
                            const std::string& label = "");

// Coefficients of z^k in Y(a,z)b versus the skew-symmetry side
// (-1)^{p(a)p(b)} e^{zL_{-1}} Y(b,-z) a, for k up to max_order.
CheckReport check_skew_symmetry(EvalContext& ctx, const StateVector& a, const StateVector& b,
                                int max_order, const std::string& label = "");

// Least N <= ceiling with (z-w)^N annihilating the matrix element
// <d| [Y(a,z), Y(b,w)] |c>. Returns -1 and a failure record if none.
struct LocalityResult {
    int order = -1;
    bool determined = false;
    std::string detail;
};
LocalityResult locality_order(EvalContext& ctx, const StateVector& a, const StateVector& b,
                              const BasisState& c, const BasisState& d, int ceiling = 16);

// Operator-level relation checks on every basis state of weight up to
// max_weight (default: the whole truncated basis).
CheckReport virasoro_check(EvalContext& ctx, int index_range,
                           HalfInt max_weight = HalfInt(INT32_MAX));
CheckReport superalgebra_check(EvalContext& ctx, int index_range,
                               HalfInt max_weight = HalfInt(INT32_MAX));

// Translation axiom [L_{-1}, a_{(n)}] = -n a_{(n-1)} over sampled states.
CheckReport translation_check(EvalContext& ctx, const StateVector& a, int n_range,
                              const std::string& label = "");

}  // namespace vosa
