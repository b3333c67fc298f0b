#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vosa/half_int.hpp"
#include "vosa/scalar.hpp"

namespace vosa {

// Z_2 parity. Even/odd in the superspace sense.
enum class Parity : uint8_t { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
    return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) & 1);
}
// Koszul sign (-1)^{p(a)p(b)} as an integer +-1.
inline int koszul(Parity a, Parity b) {
    return (a == Parity::odd && b == Parity::odd) ? -1 : 1;
}
inline const char* parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }

using GenId = uint16_t;

// One creation factor g_n in the weight-shifted indexing: g_n raises the
// conformal weight by -n.
struct Mode {
    GenId gen = 0;
    HalfInt index;

    friend bool operator==(const Mode& a, const Mode& b) {
        return a.gen == b.gen && a.index == b.index;
    }
    friend bool operator<(const Mode& a, const Mode& b) {
        if (a.gen != b.gen) return a.gen < b.gen;
        return a.index < b.index;
    }
};

// Canonical PBW monomial acting on the vacuum. Factors are stored in display
// order: factors.front() is applied last (outermost), and the sequence is
// ascending in (generator id, mode index). The vacuum is the empty monomial.
struct BasisState {
    std::vector<Mode> factors;
    HalfInt weight;
    Parity parity = Parity::even;

    bool is_vacuum() const { return factors.empty(); }
    size_t size() const { return factors.size(); }

    friend bool operator==(const BasisState& a, const BasisState& b) {
        return a.factors == b.factors;
    }
    // Weight-major order so per-weight slices come out contiguous and
    // deterministic.
    friend bool operator<(const BasisState& a, const BasisState& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        return a.factors < b.factors;
    }

    size_t hash() const noexcept {
        size_t h = 0xcbf29ce484222325ull;
        auto mix = [&h](uint64_t v) {
            h ^= v;
            h *= 0x100000001b3ull;
        };
        for (const Mode& m : a_factors_view()) {
            mix(m.gen);
            mix(static_cast<uint64_t>(static_cast<int64_t>(m.index.twice)));
        }
        return h;
    }

private:
    const std::vector<Mode>& a_factors_view() const { return factors; }
};

class VosaModel;

// Renders e.g. "L(-3)L(-2)G(-3/2)|0>" using the model's generator names.
std::string basis_state_str(const BasisState& b, const VosaModel& model);

// Finitely supported linear combination of basis states. The scalar type
// selects the computation domain: QQi for the exact algebraic layer,
// std::complex<double> for the analytic layer. The `truncated` flag records
// that components the model cannot represent were dropped (quotient models
// only); exact constructions never drop terms.
template <typename S>
struct StateVectorT {
    std::map<BasisState, S> terms;
    bool truncated = false;

    StateVectorT() = default;

    static StateVectorT basis(const BasisState& b) {
        StateVectorT v;
        v.terms.emplace(b, S(1));
        return v;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(const BasisState& b, const S& coeff) {
        if (coeff == S(0)) return;
        auto [it, inserted] = terms.emplace(b, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == S(0)) terms.erase(it);
        }
    }

    StateVectorT& operator+=(const StateVectorT& o) {
        for (const auto& [b, c] : o.terms) add_term(b, c);
        truncated = truncated || o.truncated;
        return *this;
    }
    StateVectorT& operator-=(const StateVectorT& o) {
        for (const auto& [b, c] : o.terms) add_term(b, -c);
        truncated = truncated || o.truncated;
        return *this;
    }
    friend StateVectorT operator+(StateVectorT a, const StateVectorT& b) { return a += b; }
    friend StateVectorT operator-(StateVectorT a, const StateVectorT& b) { return a -= b; }

    StateVectorT& operator*=(const S& s) {
        if (s == S(0)) {
            terms.clear();
            return *this;
        }
        for (auto& [b, c] : terms) c *= s;
        return *this;
    }
    friend StateVectorT operator*(const S& s, StateVectorT v) { return v *= s; }

    friend bool operator==(const StateVectorT& a, const StateVectorT& b) {
        return a.terms == b.terms;
    }

    // Projection onto Ker(L0 - w) intersected with the parity-p component.
    StateVectorT graded_component(HalfInt w, Parity p) const {
        StateVectorT out;
        out.truncated = truncated;
        for (const auto& [b, c] : terms)
            if (b.weight == w && b.parity == p) out.terms.emplace(b, c);
        return out;
    }

    HalfInt max_weight() const {
        HalfInt w(INT32_MIN);
        for (const auto& [b, c] : terms)
            if (b.weight > w) w = b.weight;
        return w;
    }
};

using StateVector = StateVectorT<QQi>;
using CStateVector = StateVectorT<std::complex<double>>;

inline CStateVector to_complex(const StateVector& v) {
    CStateVector out;
    out.truncated = v.truncated;
    for (const auto& [b, c] : v.terms) out.terms.emplace(b, c.to_complex());
    return out;
}

// Result of canonicalizing a raw creation-mode sequence in the free label
// superalgebra: the sorted representative with the Koszul sign picked up by
// transpositions of odd factors, or zero when an odd factor repeats.
struct Canonicalized {
    std::optional<BasisState> state;  // nullopt means the monomial is zero
    int sign = 1;

    bool is_zero() const { return !state.has_value(); }
};

// Sorts a raw sequence of creation modes into the canonical PBW label.
// Distinct factors are treated as (anti)commuting: this is the label-level
// normal form, not the operator product. Throws std::out_of_range for an
// unknown generator id and std::domain_error for a non-creation index or a
// weight above the model cutoff.
Canonicalized canonicalize(const std::vector<Mode>& raw, const VosaModel& model);

// Z twist: identity on even vectors, multiplication by i on odd ones
// (by -i for the inverse). Applying it twice gives the parity involution.
template <typename S>
StateVectorT<S> apply_ztwist(const StateVectorT<S>& v, bool inverse = false);

}  // namespace vosa

template <>
struct std::hash<vosa::BasisState> {
    size_t operator()(const vosa::BasisState& b) const noexcept { return b.hash(); }
};
