#include "vosa/scalar.hpp"

#include <stdexcept>

namespace vosa {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    try {
        Rational q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

std::string rational_str(const Rational& q) { return q.get_str(); }

std::string QQi::str() const {
    if (im == 0) return re.get_str();
    std::string out;
    if (re != 0) out += re.get_str();
    if (im > 0 && re != 0) out += "+";
    if (im == 1) {
        out += "i";
    } else if (im == -1) {
        out += "-i";
    } else {
        out += im.get_str() + "i";
    }
    return out;
}

Rational binomial(const Rational& top, long k) {
    if (k < 0) return 0;
    Rational result = 1;
    for (long j = 0; j < k; ++j) {
        result *= (top - j);
        result /= (j + 1);
    }
    return result;
}

Rational factorial(long n) {
    Rational result = 1;
    for (long j = 2; j <= n; ++j) result *= j;
    return result;
}

}  // namespace vosa
