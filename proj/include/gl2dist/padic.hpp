#pragma once

#include <gmpxx.h>

#include <climits>
#include <optional>
#include <string>

namespace gl2dist {

inline constexpr int kDefaultPrecision = 24;
inline constexpr int kMinSignificantDigits = 4;
inline constexpr int kInfiniteValuation = INT_MAX;

/// Element of Q_p (p odd) in relative-precision form p^v * unit, unit known mod p^digits.
///
/// Zero is an exact sentinel. An addition whose surviving digits all cancel yields that
/// sentinel: every input to this library is an exact integer, so total cancellation is
/// read as a true zero. Partial cancellation below kMinSignificantDigits throws
/// PrecisionUnderflow.
class PAdic {
public:
    PAdic() = default;

    static PAdic zero(int p, int precision = kDefaultPrecision);
    static PAdic from_int(int p, const mpz_class& n, int precision = kDefaultPrecision);
    static PAdic from_int(int p, long long n, int precision = kDefaultPrecision) {
        return from_int(p, mpz_class(static_cast<long>(n)), precision);
    }
    static PAdic from_rational(int p, long long num, long long den, int precision = kDefaultPrecision);
    /// p^valuation * unit; unit must be coprime to p.
    static PAdic from_parts(int p, int valuation, const mpz_class& unit, int precision = kDefaultPrecision);

    int prime() const noexcept { return p_; }
    int precision() const noexcept { return cap_; }
    /// Significant digits carried by the unit part (0 for zero).
    int digits() const noexcept { return digits_; }
    bool is_zero() const noexcept { return zero_; }
    /// kInfiniteValuation for zero.
    int valuation() const noexcept { return zero_ ? kInfiniteValuation : v_; }
    /// Unit part in [1, p^digits); zero for the zero element.
    const mpz_class& unit() const noexcept { return u_; }
    /// Residue of the unit part mod p (0 for zero).
    long unit_residue() const;
    /// Image in Z/p for an integral element; throws on negative valuation.
    long residue() const;

    PAdic operator+(const PAdic& o) const;
    /// Addition that reports cancellation through digits() instead of throwing; used by
    /// vector arithmetic, which checks precision on the whole coordinate vector.
    PAdic add_relaxed(const PAdic& o) const;
    PAdic operator-(const PAdic& o) const;
    PAdic operator-() const;
    PAdic operator*(const PAdic& o) const;
    PAdic operator/(const PAdic& o) const;
    PAdic& operator+=(const PAdic& o) { return *this = *this + o; }
    PAdic& operator-=(const PAdic& o) { return *this = *this - o; }
    PAdic& operator*=(const PAdic& o) { return *this = *this * o; }
    PAdic inverse() const;
    PAdic pow(long long e) const;
    /// Multiply by p^k.
    PAdic shifted(int k) const;

    /// Equal iff their difference vanishes at the available precision.
    bool operator==(const PAdic& o) const;

    /// Same number with the unit truncated to at most `digits` digits.
    PAdic with_digits(int digits) const;

    /// Fractional part in [0,1) as num/den with den a power of p (num = 0 if integral).
    std::pair<mpz_class, mpz_class> fractional_part() const;

    /// "p^v * unit (mod p^N)".
    std::string str() const;

private:
    PAdic(int p, int cap, int v, int digits, mpz_class u);
    void check_compatible(const PAdic& o) const;

    int p_ = 0;
    int cap_ = 0;
    int v_ = 0;
    int digits_ = 0;
    bool zero_ = true;
    mpz_class u_ = 0;
};

mpz_class pow_p(int p, int k);

/// Coset of F* / (F*)^2 with representatives {1, u, p, up}; u the least non-residue mod p.
enum class SquareClass { One, U, Pi, UPi };

std::string to_string(SquareClass c);
SquareClass multiply(SquareClass a, SquareClass b);

/// Least positive quadratic non-residue mod p.
int least_nonresidue(int p);
/// Legendre symbol (a | p) in {-1, 0, 1}.
int legendre(const mpz_class& a, int p);

int valuation(const PAdic& x);
SquareClass square_class(const PAdic& x);
/// Representative element 1, u, p or up of the class.
PAdic square_class_representative(int p, SquareClass c, int precision = kDefaultPrecision);
/// Square root with the canonical sign (smallest positive residue of the unit part), or
/// nullopt when x is not a square.
std::optional<PAdic> hensel_sqrt(const PAdic& x);
/// The (p-1)-th root of unity congruent to r mod p.
PAdic teichmuller(int p, long r, int precision = kDefaultPrecision);
/// Tame Hilbert symbol (a, b) over Q_p, p odd.
int hilbert_symbol(const PAdic& a, const PAdic& b);

}  // namespace gl2dist
