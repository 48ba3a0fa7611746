#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ggp {

// Exact half-integer, stored as the doubled value.  All parameter
// arithmetic in this library happens on this grid; there is no floating
// point anywhere.
struct HalfInt {
    std::int64_t twice = 0;

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(std::int64_t doubled) : twice(doubled) {}

    static constexpr HalfInt from_int(std::int64_t n) { return HalfInt(2 * n); }
    static constexpr HalfInt half(std::int64_t numerator) { return HalfInt(numerator); }

    bool is_integer() const { return twice % 2 == 0; }

    friend constexpr bool operator==(HalfInt a, HalfInt b) { return a.twice == b.twice; }
    friend constexpr bool operator!=(HalfInt a, HalfInt b) { return a.twice != b.twice; }
    friend constexpr bool operator<(HalfInt a, HalfInt b) { return a.twice < b.twice; }
    friend constexpr bool operator<=(HalfInt a, HalfInt b) { return a.twice <= b.twice; }
    friend constexpr bool operator>(HalfInt a, HalfInt b) { return a.twice > b.twice; }
    friend constexpr bool operator>=(HalfInt a, HalfInt b) { return a.twice >= b.twice; }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice + b.twice); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice - b.twice); }
    friend constexpr HalfInt operator-(HalfInt a) { return HalfInt(-a.twice); }

    HalfInt& operator+=(HalfInt b) { twice += b.twice; return *this; }
    HalfInt& operator-=(HalfInt b) { twice -= b.twice; return *this; }

    HalfInt abs() const { return HalfInt(twice < 0 ? -twice : twice); }

    // "a" for integers, "b/2" for strict half-integers.
    std::string str() const;
};

using HalfIntVec = std::vector<HalfInt>;

// Parse "15", "-3", "29/2", "-1/2".
HalfInt parse_halfint(const std::string& text);

// All entries share one parity class (all integral or all strictly half-integral).
bool uniform_parity(const HalfIntVec& v);

std::string to_string(const HalfIntVec& v, char separator = ',');

HalfIntVec operator+(const HalfIntVec& a, const HalfIntVec& b);
HalfIntVec operator-(const HalfIntVec& a, const HalfIntVec& b);

} // namespace ggp
