#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace vosa {

// Exact rational scalar. GMP keeps numerators/denominators arbitrary size,
// so the algebraic layer never sees overflow or rounding.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "-7/10" or "3". Throws std::invalid_argument on garbage.
Rational parse_rational(const std::string& s);

std::string rational_str(const Rational& q);

// Gaussian rational a + bi, the exact scalar domain of the algebraic layer.
struct QQi {
    Rational re = 0;
    Rational im = 0;

    QQi() = default;
    QQi(Rational r) : re(std::move(r)) {}
    QQi(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    QQi(long n) : re(n) {}

    static QQi i() { return QQi(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    QQi conj() const { return QQi(re, -im); }

    friend QQi operator+(const QQi& a, const QQi& b) { return QQi(a.re + b.re, a.im + b.im); }
    friend QQi operator-(const QQi& a, const QQi& b) { return QQi(a.re - b.re, a.im - b.im); }
    friend QQi operator-(const QQi& a) { return QQi(-a.re, -a.im); }
    friend QQi operator*(const QQi& a, const QQi& b) {
        return QQi(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    QQi& operator+=(const QQi& o) { re += o.re; im += o.im; return *this; }
    QQi& operator-=(const QQi& o) { re -= o.re; im -= o.im; return *this; }
    QQi& operator*=(const QQi& o) { *this = *this * o; return *this; }

    // Division by a nonzero Gaussian rational.
    friend QQi operator/(const QQi& a, const QQi& b) {
        Rational n = b.re * b.re + b.im * b.im;
        return QQi((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
    }

    friend bool operator==(const QQi& a, const QQi& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const QQi& a, const QQi& b) { return !(a == b); }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    // "3/2", "i", "1/2-3i", "0"
    std::string str() const;
};

// Exact binomial coefficient binom(top, k) with rational top and k >= 0.
Rational binomial(const Rational& top, long k);

// Exact factorial.
Rational factorial(long n);

}  // namespace vosa
