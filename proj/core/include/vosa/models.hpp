#pragma once

#include "vosa/model.hpp"

namespace vosa {

// Which super-Virasoro relation set a Verma-type model carries.
enum class AlgebraKind { virasoro, ns, n2 };

const char* algebra_kind_name(AlgebraKind k);

struct VermaSpec {
    AlgebraKind kind = AlgebraKind::ns;
    Rational central_charge = 0;
    HalfInt cutoff;
};

// Central charges of the NS unitary series c = 3/2 (1 - 8/(m(m+2))), m > 2,
// together with the continuum c >= 3/2.
bool ns_unitary_admissible(const Rational& c);
Rational ns_unitary_series(long m);
// N=2 series c = 3n/(n+2), n > 0, plus c >= 3.
bool n2_unitary_admissible(const Rational& c);
Rational n2_unitary_series(long n);

// Single real free fermion F: one odd weight-1/2 generator with CAR
// relations, nu = 1/2 phi(-3/2)phi(-1/2)|0>, c = 1/2.
ModelPtr build_free_fermion(HalfInt cutoff);

// d anticommuting copies in one alphabet (isomorphic to the d-fold graded
// tensor power of F); c = d/2.
ModelPtr build_free_fermions(int copies, HalfInt cutoff);

// Graded tensor product with the parity twist on the right factor's modes.
// Cutoff is min(cutoff1, cutoff2).
ModelPtr build_graded_tensor(ModelPtr m1, ModelPtr m2);

// Vacuum Verma module of the chosen algebra at exact central charge, mode
// actions by relation rewriting. The basis is the PBW monomial set.
ModelPtr build_verma(const VermaSpec& spec);

// Quotient by the radical of the invariant form, computed per weight by
// exact Gaussian elimination. The quotient basis is the graded-lex pivot
// subset of the Verma basis.
ModelPtr quotient_by_nullspace(ModelPtr verma);

// Parses {"kind": ..., ...} descriptors produced by VosaModel::descriptor.
ModelPtr build_from_descriptor(const nlohmann::json& descriptor);

}  // namespace vosa
