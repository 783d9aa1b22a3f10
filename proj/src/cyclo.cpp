#include "gl2dist/cyclo.hpp"

#include <algorithm>
#include <stdexcept>

namespace gl2dist {

Cyclo::Cyclo(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw std::invalid_argument("Cyclo: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    num %= den;
    if (num < 0) {
        num += den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
    const std::int64_t l = std::lcm(den_, o.den_);
    return {num_ * (l / den_) + o.num_ * (l / o.den_), l};
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + (-o); }

Cyclo Cyclo::operator-() const { return {-num_, den_}; }

Cyclo Cyclo::times(std::int64_t k) const {
    // (num * k) mod den without overflow for the small denominators used here.
    const std::int64_t kk = ((k % den_) + den_) % den_;
    return {static_cast<std::int64_t>((static_cast<__int128>(num_) * kk) % den_), den_};
}

std::strong_ordering Cyclo::operator<=>(const Cyclo& o) const {
    const __int128 lhs = static_cast<__int128>(num_) * o.den_;
    const __int128 rhs = static_cast<__int128>(o.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Cyclo::str() const {
    if (num_ == 0) return "0";
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Cyclo Cyclo::parse(const std::string& text) {
    const auto slash = text.find('/');
    std::size_t used = 0;
    try {
        if (slash == std::string::npos) {
            const long long n = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return {n, 1};
        }
        const std::string a = text.substr(0, slash);
        const std::string b = text.substr(slash + 1);
        std::size_t ua = 0;
        std::size_t ub = 0;
        const long long n = std::stoll(a, &ua);
        const long long d = std::stoll(b, &ub);
        if (ua != a.size() || ub != b.size() || d == 0) throw std::invalid_argument(text);
        return {n, d};
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("rational out of range: " + text);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational: " + text);
    }
}

std::vector<Cyclo> farey_values(int max_den) {
    std::vector<Cyclo> out;
    for (int d = 1; d <= max_den; ++d) {
        for (int n = 0; n < d; ++n) {
            if (std::gcd(n, d) == 1) out.emplace_back(n, d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace gl2dist
