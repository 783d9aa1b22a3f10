#include "gl2dist/padic.hpp"

#include <algorithm>
#include <stdexcept>

#include "gl2dist/errors.hpp"

namespace gl2dist {

mpz_class pow_p(int p, int k) {
    if (k < 0) throw std::invalid_argument("pow_p: negative exponent");
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    return r;
}

namespace {

int strip_p(mpz_class& n, int p) {
    int k = 0;
    const mpz_class pp(p);
    while (n != 0 && mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
        n /= pp;
        ++k;
    }
    return k;
}

mpz_class mod_positive(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

void require_odd_prime(int p) {
    if (p < 3 || p % 2 == 0 || mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 25) == 0) {
        throw MathError("p must be an odd prime, got " + std::to_string(p));
    }
}

}  // namespace

PAdic::PAdic(int p, int cap, int v, int digits, mpz_class u)
    : p_(p), cap_(cap), v_(v), digits_(digits), zero_(false), u_(std::move(u)) {}

PAdic PAdic::zero(int p, int precision) {
    require_odd_prime(p);
    PAdic z;
    z.p_ = p;
    z.cap_ = precision;
    return z;
}

PAdic PAdic::from_int(int p, const mpz_class& n, int precision) {
    require_odd_prime(p);
    if (precision < 1) throw MathError("precision must be positive");
    if (n == 0) return zero(p, precision);
    mpz_class m = n;
    const int v = strip_p(m, p);
    return {p, precision, v, precision, mod_positive(m, pow_p(p, precision))};
}

PAdic PAdic::from_rational(int p, long long num, long long den, int precision) {
    if (den == 0) throw std::invalid_argument("from_rational: zero denominator");
    return from_int(p, num, precision) / from_int(p, den, precision);
}

PAdic PAdic::from_parts(int p, int valuation, const mpz_class& unit, int precision) {
    require_odd_prime(p);
    if (mpz_divisible_ui_p(unit.get_mpz_t(), static_cast<unsigned long>(p)) != 0) {
        throw MathError("from_parts: unit divisible by p");
    }
    return {p, precision, valuation, precision, mod_positive(unit, pow_p(p, precision))};
}

void PAdic::check_compatible(const PAdic& o) const {
    if (p_ != o.p_) throw MathError("p-adic numbers over different primes");
}

long PAdic::unit_residue() const {
    if (zero_) return 0;
    return static_cast<long>(mpz_fdiv_ui(u_.get_mpz_t(), static_cast<unsigned long>(p_)));
}

long PAdic::residue() const {
    if (zero_) return 0;
    if (v_ < 0) throw MathError("residue of a non-integral p-adic number");
    return v_ == 0 ? unit_residue() : 0;
}

PAdic PAdic::operator+(const PAdic& o) const {
    PAdic r = add_relaxed(o);
    if (zero_ || o.zero_ || r.zero_) return r;
    // Only cancellation is an underflow; inputs that already carry few digits pass through.
    if (r.digits_ < kMinSignificantDigits && r.digits_ < std::min(digits_, o.digits_)) {
        throw PrecisionUnderflow("p-adic cancellation left " + std::to_string(r.digits_) + " significant digits");
    }
    return r;
}

PAdic PAdic::add_relaxed(const PAdic& o) const {
    check_compatible(o);
    if (zero_) return o;
    if (o.zero_) return *this;
    const int cap = std::max(cap_, o.cap_);
    const int vmin = std::min(v_, o.v_);
    const int absolute = std::min(v_ + digits_, o.v_ + o.digits_);
    const int width = absolute - vmin;
    const mpz_class mod = pow_p(p_, width);
    mpz_class raw = u_ * pow_p(p_, v_ - vmin) + o.u_ * pow_p(p_, o.v_ - vmin);
    raw = mod_positive(raw, mod);
    if (raw == 0) {
        PAdic z = zero(p_, cap);
        return z;
    }
    const int shift = strip_p(raw, p_);
    const int digits = width - shift;
    return {p_, cap, vmin + shift, digits, mod_positive(raw, pow_p(p_, digits))};
}

PAdic PAdic::operator-() const {
    if (zero_) return *this;
    const mpz_class mod = pow_p(p_, digits_);
    return {p_, cap_, v_, digits_, mod_positive(mod - u_, mod)};
}

PAdic PAdic::operator-(const PAdic& o) const { return *this + (-o); }

PAdic PAdic::operator*(const PAdic& o) const {
    check_compatible(o);
    const int cap = std::max(cap_, o.cap_);
    if (zero_ || o.zero_) return zero(p_, cap);
    const int digits = std::min(digits_, o.digits_);
    return {p_, cap, v_ + o.v_, digits, mod_positive(u_ * o.u_, pow_p(p_, digits))};
}

PAdic PAdic::inverse() const {
    if (zero_) throw MathError("inverse of zero");
    const mpz_class mod = pow_p(p_, digits_);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), u_.get_mpz_t(), mod.get_mpz_t());
    return {p_, cap_, -v_, digits_, inv};
}

PAdic PAdic::operator/(const PAdic& o) const { return *this * o.inverse(); }

PAdic PAdic::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    if (zero_) {
        if (e == 0) return from_int(p_, 1, cap_);
        return *this;
    }
    const mpz_class mod = pow_p(p_, digits_);
    mpz_class r;
    mpz_powm_ui(r.get_mpz_t(), u_.get_mpz_t(), static_cast<unsigned long>(e), mod.get_mpz_t());
    return {p_, cap_, static_cast<int>(v_ * e), digits_, r};
}

PAdic PAdic::shifted(int k) const {
    if (zero_) return *this;
    return {p_, cap_, v_ + k, digits_, u_};
}

bool PAdic::operator==(const PAdic& o) const {
    if (p_ != o.p_) return false;
    if (zero_ || o.zero_) return zero_ && o.zero_;
    if (v_ != o.v_) return false;
    const int d = std::min(digits_, o.digits_);
    const mpz_class mod = pow_p(p_, d);
    return mod_positive(u_ - o.u_, mod) == 0;
}

PAdic PAdic::with_digits(int digits) const {
    if (zero_ || digits >= digits_) return *this;
    if (digits < 1) throw PrecisionUnderflow("with_digits: no digits left");
    return {p_, cap_, v_, digits, mod_positive(u_, pow_p(p_, digits))};
}

std::pair<mpz_class, mpz_class> PAdic::fractional_part() const {
    if (zero_ || v_ >= 0) return {mpz_class(0), mpz_class(1)};
    const mpz_class den = pow_p(p_, -v_);
    return {mod_positive(u_, den), den};
}

std::string PAdic::str() const {
    if (zero_) return "0";
    return std::to_string(p_) + "^" + std::to_string(v_) + " * " + u_.get_str() + " (mod " + std::to_string(p_) +
           "^" + std::to_string(digits_) + ")";
}

std::string to_string(SquareClass c) {
    switch (c) {
        case SquareClass::One: return "1";
        case SquareClass::U: return "u";
        case SquareClass::Pi: return "p";
        case SquareClass::UPi: return "up";
    }
    return "?";
}

SquareClass multiply(SquareClass a, SquareClass b) {
    const int bits = static_cast<int>(a) ^ static_cast<int>(b);
    return static_cast<SquareClass>(bits);
}

int legendre(const mpz_class& a, int p) {
    return mpz_legendre(a.get_mpz_t(), mpz_class(p).get_mpz_t());
}

int least_nonresidue(int p) {
    require_odd_prime(p);
    for (int a = 2; a < p; ++a) {
        if (legendre(mpz_class(a), p) == -1) return a;
    }
    throw MathError("no non-residue found");
}

int valuation(const PAdic& x) { return x.valuation(); }

SquareClass square_class(const PAdic& x) {
    if (x.is_zero()) throw MathError("square class of zero");
    const bool odd = (x.valuation() % 2) != 0;
    const bool nonresidue = legendre(mpz_class(x.unit_residue()), x.prime()) == -1;
    // Encoding: bit 0 = non-residue unit, bit 1 = odd valuation.
    return static_cast<SquareClass>((nonresidue ? 1 : 0) | (odd ? 2 : 0));
}

PAdic square_class_representative(int p, SquareClass c, int precision) {
    switch (c) {
        case SquareClass::One: return PAdic::from_int(p, 1, precision);
        case SquareClass::U: return PAdic::from_int(p, least_nonresidue(p), precision);
        case SquareClass::Pi: return PAdic::from_int(p, p, precision);
        case SquareClass::UPi: return PAdic::from_int(p, static_cast<long long>(least_nonresidue(p)) * p, precision);
    }
    throw MathError("bad square class");
}

std::optional<PAdic> hensel_sqrt(const PAdic& x) {
    if (x.is_zero()) throw MathError("hensel_sqrt of zero");
    if (square_class(x) != SquareClass::One) return std::nullopt;
    const int p = x.prime();
    const int digits = x.digits();
    if (digits < kMinSignificantDigits) throw PrecisionUnderflow("hensel_sqrt: input has too few digits");
    const long a0 = x.unit_residue();
    long r0 = -1;
    for (long r = 1; r < p; ++r) {
        if ((r * r) % p == a0) {
            r0 = r;
            break;
        }
    }
    // Newton iteration y <- y - (y^2 - a) / (2y), doubling the known digits each step.
    const mpz_class mod = pow_p(p, digits);
    mpz_class y = r0;
    for (int known = 1; known < digits; known *= 2) {
        mpz_class f = y * y - x.unit();
        mpz_class two_y = 2 * y;
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), two_y.get_mpz_t(), mod.get_mpz_t());
        y = mod_positive(y - f * inv, mod);
    }
    return PAdic::from_parts(p, x.valuation() / 2, y, x.precision()).with_digits(digits);
}

PAdic teichmuller(int p, long r, int precision) {
    require_odd_prime(p);
    const long rr = ((r % p) + p) % p;
    if (rr == 0) throw MathError("teichmuller: residue is zero");
    // x -> x^p converges to the root of unity, gaining one digit per step.
    const mpz_class mod = pow_p(p, precision);
    mpz_class x = rr;
    for (int i = 0; i <= precision; ++i) {
        mpz_class next;
        mpz_powm_ui(next.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p), mod.get_mpz_t());
        if (next == x) break;
        x = next;
    }
    return PAdic::from_parts(p, 0, x, precision);
}

int hilbert_symbol(const PAdic& a, const PAdic& b) {
    if (a.is_zero() || b.is_zero()) throw MathError("hilbert_symbol of zero");
    if (a.prime() != b.prime()) throw MathError("hilbert_symbol: different primes");
    const int p = a.prime();
    const long alpha = a.valuation();
    const long beta = b.valuation();
    int sign = 1;
    if ((alpha * beta) % 2 != 0 && (p % 4) == 3) sign = -1;
    const int lu = legendre(mpz_class(a.unit_residue()), p);
    const int lv = legendre(mpz_class(b.unit_residue()), p);
    if (beta % 2 != 0) sign *= lu;
    if (alpha % 2 != 0) sign *= lv;
    return sign;
}

}  // namespace gl2dist
