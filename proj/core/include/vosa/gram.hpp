#pragma once

#include <optional>
#include <vector>

#include "vosa/model.hpp"

namespace vosa {

// Invariant scalar product (u|v) = vacuum coefficient of u^+ v, computed by
// transporting the adjoints of u's factors onto v through the model's mode
// action. Exact; zero across distinct weights.
QQi scalar_product(const VosaModel& model, const BasisState& u, const BasisState& v);
// Sesquilinear extension, antilinear in the first slot.
QQi scalar_product(const VosaModel& model, const StateVector& u, const StateVector& v);

QQi norm_squared(const VosaModel& model, const StateVector& v);

struct GramMatrix {
    HalfInt weight;
    std::vector<BasisState> states;
    std::vector<std::vector<QQi>> entries;  // Hermitian

    size_t dim() const { return states.size(); }
    // Throws std::domain_error if any entry has a nonzero imaginary part.
    std::vector<std::vector<Rational>> real_entries() const;
};

GramMatrix gram_matrix(const VosaModel& model, HalfInt weight);

// Reduced row echelon form over the rationals, no column exchanges: pivot
// columns come out in graded-lex order.
struct Rref {
    std::vector<std::vector<Rational>> matrix;
    std::vector<size_t> pivot_columns;

    size_t rank() const { return pivot_columns.size(); }
    std::optional<size_t> pivot_row_of_column(size_t col) const;
};
Rref reduced_row_echelon(std::vector<std::vector<Rational>> m);

// Symmetric (Hermitian) elimination without pivoting. Positive-definiteness
// is decided by exact pivot signs; a zero diagonal with a nonzero residual
// row witnesses indefiniteness.
struct HermitianPivots {
    std::vector<Rational> pivots;  // nonzero pivots in elimination order
    size_t dim = 0;
    bool positive_definite = false;
    bool positive_semidefinite = false;
    bool indefinite = false;
};
HermitianPivots hermitian_pivots(const GramMatrix& g);

// Exact kernel of the Gram matrix at one weight, as state vectors.
std::vector<StateVector> gram_kernel(const GramMatrix& g);

// Complex-coefficient pairing through the exact per-pair scalar product.
std::complex<double> scalar_product_c(const VosaModel& model, const CStateVector& u,
                                      const CStateVector& v);
double state_norm(const VosaModel& model, const CStateVector& v);

// Per-weight positivity/kernel summary.
struct GramReport {
    HalfInt weight;
    size_t dim = 0;
    size_t rank = 0;
    bool positive_definite = false;
    bool positive_semidefinite = false;
    std::vector<StateVector> kernel;
    std::vector<Rational> pivots;
};
GramReport gram(const VosaModel& model, HalfInt weight);

}  // namespace vosa
