#include "vosa/state.hpp"

#include <stdexcept>

#include "vosa/model.hpp"

namespace vosa {

Canonicalized canonicalize(const std::vector<Mode>& raw, const VosaModel& model) {
    Canonicalized result;
    std::vector<Mode> sorted;
    sorted.reserve(raw.size());
    HalfInt weight(0);

    for (const Mode& m : raw) {
        if (m.gen >= model.generators().size()) throw std::out_of_range("unknown generator id");
        if (!model.is_creation_index(m.gen, m.index))
            throw std::domain_error("mode " + m.index.str() + " is not a creation index");
        weight += -m.index;

        // Insertion sort from the right, tracking Koszul transposition signs.
        Parity pm = model.generator(m.gen).parity;
        size_t pos = sorted.size();
        while (pos > 0 && m < sorted[pos - 1]) {
            Parity po = model.generator(sorted[pos - 1].gen).parity;
            result.sign *= koszul(pm, po);
            --pos;
        }
        if (pos > 0 && sorted[pos - 1] == m && pm == Parity::odd) {
            result.state.reset();  // Pauli rule
            result.sign = 1;
            return result;
        }
        sorted.insert(sorted.begin() + pos, m);
    }
    if (weight > model.cutoff())
        throw std::domain_error("monomial weight " + weight.str() + " exceeds cutoff " +
                                model.cutoff().str());
    result.state = model.make_state(sorted);
    return result;
}

template <typename S>
StateVectorT<S> apply_ztwist(const StateVectorT<S>& v, bool inverse) {
    StateVectorT<S> out;
    out.truncated = v.truncated;
    for (const auto& [b, c] : v.terms) {
        if (b.parity == Parity::even) {
            out.terms.emplace(b, c);
        } else {
            S i_factor = S(QQi::i());
            if (inverse) i_factor = -i_factor;
            out.terms.emplace(b, c * i_factor);
        }
    }
    return out;
}

template <>
StateVectorT<std::complex<double>> apply_ztwist(const StateVectorT<std::complex<double>>& v,
                                                bool inverse) {
    StateVectorT<std::complex<double>> out;
    out.truncated = v.truncated;
    std::complex<double> i_factor(0.0, inverse ? -1.0 : 1.0);
    for (const auto& [b, c] : v.terms)
        out.terms.emplace(b, b.parity == Parity::even ? c : c * i_factor);
    return out;
}

template StateVectorT<QQi> apply_ztwist(const StateVectorT<QQi>&, bool);

}  // namespace vosa
