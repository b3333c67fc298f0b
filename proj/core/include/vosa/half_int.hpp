#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace vosa {

// Element of (1/2)Z, stored as twice its value so that arithmetic and
// comparisons stay exact and hashable.
struct HalfInt {
    int32_t twice = 0;

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(int32_t twice_value) : twice(twice_value) {}

    static constexpr HalfInt whole(int32_t n) { return HalfInt(2 * n); }
    static constexpr HalfInt half(int32_t numerator) { return HalfInt(numerator); }

    constexpr bool is_integer() const { return twice % 2 == 0; }
    // Valid only when is_integer().
    constexpr int32_t to_int() const { return twice / 2; }
    constexpr double to_double() const { return 0.5 * static_cast<double>(twice); }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice + b.twice); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice - b.twice); }
    friend constexpr HalfInt operator-(HalfInt a) { return HalfInt(-a.twice); }
    constexpr HalfInt& operator+=(HalfInt o) { twice += o.twice; return *this; }
    constexpr HalfInt& operator-=(HalfInt o) { twice -= o.twice; return *this; }

    friend constexpr bool operator==(HalfInt a, HalfInt b) { return a.twice == b.twice; }
    friend constexpr bool operator!=(HalfInt a, HalfInt b) { return a.twice != b.twice; }
    friend constexpr bool operator<(HalfInt a, HalfInt b) { return a.twice < b.twice; }
    friend constexpr bool operator<=(HalfInt a, HalfInt b) { return a.twice <= b.twice; }
    friend constexpr bool operator>(HalfInt a, HalfInt b) { return a.twice > b.twice; }
    friend constexpr bool operator>=(HalfInt a, HalfInt b) { return a.twice >= b.twice; }

    // Renders as "3" or "7/2".
    std::string str() const {
        if (is_integer()) return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }

    // Accepts "3", "-2", "7/2", "-13/2". Throws std::invalid_argument otherwise.
    static HalfInt parse(const std::string& s);
};

inline HalfInt HalfInt::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return HalfInt::whole(std::stoi(s));
        }
        int num = std::stoi(s.substr(0, slash));
        int den = std::stoi(s.substr(slash + 1));
        if (den == 2) return HalfInt(num);
        if (den == 1) return HalfInt::whole(num);
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("not a half-integer: '" + s + "'");
}

}  // namespace vosa

template <>
struct std::hash<vosa::HalfInt> {
    size_t operator()(const vosa::HalfInt& h) const noexcept {
        return std::hash<int32_t>()(h.twice);
    }
};
