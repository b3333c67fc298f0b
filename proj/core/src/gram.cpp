#include "vosa/gram.hpp"

#include <cmath>
#include <stdexcept>

namespace vosa {

QQi scalar_product(const VosaModel& model, const BasisState& u, const BasisState& v) {
    if (u.weight != v.weight || u.parity != v.parity) return QQi(0);
    // (u|v) = <0| f_1^+ ... applied left-to-right: the outermost factor of u
    // becomes the innermost annihilator.
    StateVector w = StateVector::basis(v);
    for (const Mode& m : u.factors) {
        auto rule = model.adjoint_rule(m.gen);
        w = model.apply_generator(rule.gen, -m.index, w);
        if (rule.sign < 0) w *= QQi(-1);
        if (w.is_zero()) return QQi(0);
    }
    if (w.truncated) throw std::logic_error("scalar_product hit a truncated intermediate");
    auto it = w.terms.find(BasisState{});
    return it == w.terms.end() ? QQi(0) : it->second;
}

QQi scalar_product(const VosaModel& model, const StateVector& u, const StateVector& v) {
    QQi out(0);
    for (const auto& [ub, uc] : u.terms)
        for (const auto& [vb, vc] : v.terms) {
            if (ub.weight != vb.weight || ub.parity != vb.parity) continue;
            QQi p = scalar_product(model, ub, vb);
            if (!p.is_zero()) out += uc.conj() * p * vc;
        }
    return out;
}

QQi norm_squared(const VosaModel& model, const StateVector& v) {
    return scalar_product(model, v, v);
}

std::complex<double> scalar_product_c(const VosaModel& model, const CStateVector& u,
                                      const CStateVector& v) {
    std::complex<double> out{0.0, 0.0};
    for (const auto& [ub, uc] : u.terms)
        for (const auto& [vb, vc] : v.terms) {
            if (ub.weight != vb.weight || ub.parity != vb.parity) continue;
            QQi p = scalar_product(model, ub, vb);
            if (!p.is_zero()) out += std::conj(uc) * p.to_complex() * vc;
        }
    return out;
}

double state_norm(const VosaModel& model, const CStateVector& v) {
    double n2 = scalar_product_c(model, v, v).real();
    return n2 <= 0.0 ? 0.0 : std::sqrt(n2);
}

std::vector<std::vector<Rational>> GramMatrix::real_entries() const {
    std::vector<std::vector<Rational>> out(entries.size());
    for (size_t i = 0; i < entries.size(); ++i) {
        out[i].reserve(entries[i].size());
        for (const QQi& q : entries[i]) {
            if (!q.is_real())
                throw std::domain_error("Gram matrix has a nonreal entry " + q.str());
            out[i].push_back(q.re);
        }
    }
    return out;
}

GramMatrix gram_matrix(const VosaModel& model, HalfInt weight) {
    GramMatrix g;
    g.weight = weight;
    g.states = model.basis_at(weight);
    size_t n = g.states.size();
    g.entries.assign(n, std::vector<QQi>(n, QQi(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i; j < n; ++j) {
            QQi val = scalar_product(model, g.states[i], g.states[j]);
            g.entries[i][j] = val;
            if (j != i) g.entries[j][i] = val.conj();
        }
    }
    return g;
}

std::optional<size_t> Rref::pivot_row_of_column(size_t col) const {
    for (size_t r = 0; r < pivot_columns.size(); ++r)
        if (pivot_columns[r] == col) return r;
    return std::nullopt;
}

Rref reduced_row_echelon(std::vector<std::vector<Rational>> m) {
    Rref out;
    size_t rows = m.size();
    size_t cols = rows == 0 ? 0 : m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        Rational inv = m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] /= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        out.pivot_columns.push_back(c);
        ++r;
    }
    m.resize(r);
    out.matrix = std::move(m);
    return out;
}

HermitianPivots hermitian_pivots(const GramMatrix& g) {
    HermitianPivots out;
    out.dim = g.dim();
    auto a = g.entries;
    size_t n = out.dim;
    bool any_zero_pivot = false;
    for (size_t k = 0; k < n; ++k) {
        if (!a[k][k].is_real())
            throw std::domain_error("Hermitian matrix has a nonreal diagonal entry");
        Rational d = a[k][k].re;
        if (d == 0) {
            for (size_t j = k + 1; j < n; ++j) {
                if (!a[k][j].is_zero()) {
                    out.indefinite = true;
                    break;
                }
            }
            any_zero_pivot = true;
            if (out.indefinite) break;
            continue;
        }
        out.pivots.push_back(d);
        // Row elimination; the trailing block stays Hermitian (it is the
        // Schur complement), so the diagonal keeps giving the LDL^* pivots.
        for (size_t i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            QQi f = a[i][k] / QQi(d);
            for (size_t j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
            a[i][k] = QQi(0);
        }
    }
    bool all_positive = true;
    for (const Rational& p : out.pivots)
        if (p <= 0) all_positive = false;
    out.positive_definite = !out.indefinite && all_positive && !any_zero_pivot &&
                            out.pivots.size() == n;
    out.positive_semidefinite = !out.indefinite && all_positive;
    return out;
}

std::vector<StateVector> gram_kernel(const GramMatrix& g) {
    std::vector<StateVector> kernel;
    if (g.dim() == 0) return kernel;
    Rref rref = reduced_row_echelon(g.real_entries());
    for (size_t col = 0; col < g.dim(); ++col) {
        if (rref.pivot_row_of_column(col).has_value()) continue;
        StateVector v;
        v.add_term(g.states[col], QQi(1));
        for (size_t r = 0; r < rref.pivot_columns.size(); ++r) {
            const Rational& coeff = rref.matrix[r][col];
            if (coeff != 0) v.add_term(g.states[rref.pivot_columns[r]], QQi(-coeff));
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

GramReport gram(const VosaModel& model, HalfInt weight) {
    GramMatrix m = gram_matrix(model, weight);
    GramReport rep;
    rep.weight = weight;
    rep.dim = m.dim();
    if (m.dim() == 0) {
        rep.positive_definite = true;  // vacuously
        rep.positive_semidefinite = true;
        return rep;
    }
    HermitianPivots piv = hermitian_pivots(m);
    rep.positive_definite = piv.positive_definite;
    rep.positive_semidefinite = piv.positive_semidefinite;
    rep.pivots = piv.pivots;
    rep.kernel = gram_kernel(m);
    rep.rank = rep.dim - rep.kernel.size();
    return rep;
}

}  // namespace vosa
