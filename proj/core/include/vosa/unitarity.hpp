#pragma once

#include "nlohmann/json_fwd.hpp"
#include "vosa/gram.hpp"
#include "vosa/mode_engine.hpp"
#include "vosa/reports.hpp"

namespace vosa {

// Normalized invariant bilinear form, computed by peeling the outermost
// creation mode of the left argument:
//   (a_n b, c) = (-1)^{2d_a^2+d_a} sum_l (b, (L_1^l a)_{-n} c) / l!
// down to (vacuum, vacuum) = 1. Bilinear in both slots, no conjugation.
class BilinearForm {
public:
    explicit BilinearForm(const VosaModel& model);

    QQi pair(const BasisState& u, const BasisState& v);
    QQi pair(const StateVector& u, const StateVector& v);
    GramMatrix matrix(HalfInt weight);

private:
    const VosaModel& model_;
    EvalContext ctx_;
};

// Description of a_n^+ for a quasi-primary state a:
// a_n^+ = (-1)^{2d^2+d} (theta a)_{-n}.
struct AdjointMode {
    StateVector theta_a;
    int sign = 1;
    HalfInt index;  // the adjoint acts at -index
};

// Throws std::domain_error unless a is quasi-primary (L_1 a = 0).
AdjointMode adjoint_mode(EvalContext& ctx, const PctCandidate& pct, const StateVector& a,
                         HalfInt n);

// Certifies (a_n b | c) = (b | a_n^+ c) over all basis pairs within
// headroom.
CheckReport adjoint_mode_check(EvalContext& ctx, const PctCandidate& pct, const StateVector& a,
                               HalfInt n, const std::string& label = "");

// True iff Y(a,z) is Hermitian: a_n^+ = a_{-n} for all n, equivalently
// (-1)^{2d^2+d} theta(a) = a. Also brute-forces the matrix elements.
struct HermitianFieldResult {
    bool hermitian = false;
    std::string witness;
};
HermitianFieldResult hermitian_field_check(EvalContext& ctx, const PctCandidate& pct,
                                           const StateVector& a);

// Full unitarity verification: exact Gram positivity on every weight up to
// the cutoff, the mode-wise invariance of the scalar product on seeded
// samples, and the antilinear-involution characterization.
CheckReport verify_unitarity(EvalContext& ctx, const PctCandidate& pct, uint64_t seed,
                             int samples = 64);

nlohmann::json gram_report_json(const VosaModel& model, const GramReport& rep);

// CSV rows "weight,dim,rank,positive_definite" for every weight <= cutoff.
std::string gram_summary_csv(const VosaModel& model);

}  // namespace vosa
