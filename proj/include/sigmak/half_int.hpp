#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace sigmak {

// Exact multiple of 1/2, stored as twice its value.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr explicit HalfInt(std::int64_t whole) : twice_(2 * whole) {}

    static constexpr HalfInt from_twice(std::int64_t twice) {
        HalfInt h;
        h.twice_ = twice;
        return h;
    }

    constexpr std::int64_t twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }

    constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
    constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }

    constexpr auto operator<=>(const HalfInt&) const = default;

    // "2", "2.5", "-0.5"
    std::string str() const {
        std::int64_t a = twice_ < 0 ? -twice_ : twice_;
        std::string s = (twice_ < 0 ? "-" : "") + std::to_string(a / 2);
        if (a % 2) s += ".5";
        return s;
    }

private:
    std::int64_t twice_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.str(); }

} // namespace sigmak
