#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace gl2dist {

/// A root of unity exp(2*pi*i*r) stored additively as an exact rational r in [0, 1).
class Cyclo {
public:
    constexpr Cyclo() = default;
    Cyclo(std::int64_t num, std::int64_t den);

    static Cyclo zero() { return {}; }

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_ == 0; }

    /// Order of the root of unity (the reduced denominator).
    std::int64_t order() const noexcept { return den_; }

    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    /// Integer multiple (repeated addition in Q/Z).
    Cyclo times(std::int64_t k) const;

    bool operator==(const Cyclo&) const = default;
    /// Ordering by numeric value in [0, 1).
    std::strong_ordering operator<=>(const Cyclo& o) const;

    double as_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// "0", "1/2", "3/8".
    std::string str() const;
    /// Accepts "a/b" or an integer; reduced mod 1. Throws std::invalid_argument.
    static Cyclo parse(const std::string& text);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// All r in [0, 1) whose reduced denominator is at most max_den, in increasing order.
std::vector<Cyclo> farey_values(int max_den);

}  // namespace gl2dist
