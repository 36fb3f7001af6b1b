#pragma once

#include <compare>
#include <cstdlib>
#include <string>

namespace trizeta {

/// Half-integer stored as twice its value, so 5/2 is HalfInt{5}.
struct HalfInt {
    int twice = 0;

    HalfInt() = default;
    constexpr explicit HalfInt(int t) : twice(t) {}
    static constexpr HalfInt of_int(int n) { return HalfInt{2 * n}; }
    static constexpr HalfInt half(int numerator) { return HalfInt{numerator}; }

    bool is_integer() const { return twice % 2 == 0; }
    int as_int() const { return twice / 2; }
    bool is_nonpositive_integer() const { return is_integer() && twice <= 0; }
    double to_double() const { return twice / 2.0; }

    friend HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt{a.twice + b.twice}; }
    friend HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt{a.twice - b.twice}; }
    friend HalfInt operator+(HalfInt a, int n) { return HalfInt{a.twice + 2 * n}; }
    friend HalfInt operator-(HalfInt a, int n) { return HalfInt{a.twice - 2 * n}; }
    friend HalfInt operator-(HalfInt a) { return HalfInt{-a.twice}; }
    auto operator<=>(const HalfInt&) const = default;

    std::string str() const {
        if (is_integer()) return std::to_string(as_int());
        return std::to_string(twice) + "/2";
    }
};

} // namespace trizeta
