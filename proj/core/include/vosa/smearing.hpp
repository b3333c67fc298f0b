#pragma once

#include "vosa/mobius.hpp"
#include "vosa/mode_engine.hpp"
#include "vosa/test_function.hpp"

namespace vosa {

// Polynomial energy-bound certificate ||a_n c|| <= M (1+|n|)^s ||(L0+1)^k c||.
struct EnergyCertificate {
    double M = 0.0;
    double s = 0.0;
    double k = 0.0;
    bool exact_zeroth = false;  // proved exactly, not fitted
};

// Exact 0th-order check ||a_m c||^2 <= ||a||^2 ||c||^2 on every basis state
// of weight <= max_weight, in rational arithmetic.
CheckReport zeroth_order_bound_check(EvalContext& ctx, const StateVector& a,
                                     HalfInt max_weight, const std::string& label = "");

// Least-squares envelope fit of log||a_n c|| over per-(|n|, weight) bucket
// maxima. Fails (flag) when residual trends grow with weight.
struct EnergyFit {
    EnergyCertificate cert;
    double max_log_residual = 0.0;
    bool trend_suspicious = false;
};
EnergyFit energy_bound_fit(EvalContext& ctx, const StateVector& a, int max_index,
                           HalfInt max_weight);

// Smeared vertex operator Y(a,f)c = sum_n f_n a_n c over the band. Modes the
// model cannot represent are folded into the reported truncation bound via
// the certificate; the band tail always is.
struct SmearResult {
    CStateVector state;
    double truncation_bound = 0.0;
};
SmearResult smear(EvalContext& ctx, const StateVector& a, const TestFunction& f,
                  const StateVector& c, const EnergyCertificate& cert,
                  HalfInt weight_window = HalfInt(INT32_MAX));

// e^{itL0} Y(a,f) e^{-itL0} c versus Y(a, rotated f) c, the rotated side
// re-expanded independently through the Moebius action on the function.
CheckReport rotation_covariance_check(EvalContext& ctx, const StateVector& a,
                                      const TestFunction& f, const std::vector<double>& angles,
                                      const EnergyCertificate& cert, double tol,
                                      const std::string& label = "");

// || [Y(a,f), Y(b,g)] c || for test functions with disjoint supports. The
// commutator is assembled mode-pair-wise through the commutator formula, so
// only small exact states appear; the band tail goes into the budget.
struct WightmanResult {
    CheckReport report;
    double residual = 0.0;
    double budget = 0.0;
};
WightmanResult wightman_locality_check(EvalContext& ctx, const StateVector& a,
                                       const TestFunction& f, const StateVector& b,
                                       const TestFunction& g,
                                       const std::vector<BasisState>& samples,
                                       const EnergyCertificate& cert_a,
                                       const EnergyCertificate& cert_b, double tol);

}  // namespace vosa
