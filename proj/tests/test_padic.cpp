#include <random>

#include "doctest.h"
#include "gl2dist/cyclo.hpp"
#include "gl2dist/errors.hpp"
#include "gl2dist/padic.hpp"
#include "gl2dist/residue_field.hpp"

using namespace gl2dist;

namespace {

PAdic Z(int p, long long n) { return PAdic::from_int(p, n); }

}  // namespace

TEST_CASE("valuation") {
    CHECK(valuation(Z(3, 9)) == 2);
    CHECK(valuation(Z(3, 1)) == 0);
    CHECK(valuation(PAdic::from_rational(3, 5, 3)) == -1);
    CHECK(valuation(PAdic::zero(3)) == kInfiniteValuation);
}

TEST_CASE("square classes") {
    CHECK(square_class(Z(3, 4)) == SquareClass::One);
    CHECK(square_class(Z(3, -1)) == SquareClass::U);
    CHECK(square_class(Z(3, 12)) == SquareClass::Pi);
    CHECK(square_class(Z(5, 10)) == SquareClass::UPi);
    CHECK_THROWS_AS(square_class(PAdic::zero(3)), MathError);
    CHECK(multiply(SquareClass::Pi, SquareClass::Pi) == SquareClass::One);
    CHECK(multiply(SquareClass::U, SquareClass::Pi) == SquareClass::UPi);
    CHECK(least_nonresidue(3) == 2);
    CHECK(least_nonresidue(7) == 3);
}

TEST_CASE("square class of 12 against squares mod 3^6") {
    // 12 = 3 * 4: odd valuation, unit part 4 a square mod 3^6.
    const long m = 729;
    bool four_is_square = false;
    for (long y = 0; y < m; ++y) four_is_square |= (y * y) % m == 4;
    CHECK(four_is_square);
    CHECK(square_class(Z(3, 12)) == SquareClass::Pi);
}

TEST_CASE("hensel_sqrt") {
    auto r = hensel_sqrt(Z(3, 4));
    REQUIRE(r);
    // Roots are ±2; the canonical one has the smaller residue, 1, so it is -2.
    CHECK(*r == Z(3, -2));
    CHECK_FALSE(hensel_sqrt(Z(3, 3)));
    auto s = hensel_sqrt(Z(7, 2));
    REQUIRE(s);
    CHECK(s->unit_residue() == 3);
    CHECK(*s * *s == Z(7, 2));
    CHECK(s->digits() == kDefaultPrecision);
}

TEST_CASE("hensel_sqrt round trip on random squares") {
    std::mt19937_64 rng(7);
    for (int p : {3, 5, 7, 11}) {
        for (int i = 0; i < 50; ++i) {
            const long long n = static_cast<long long>(rng() % 100000) + 1;
            const PAdic x = Z(p, n);
            auto r = hensel_sqrt(x);
            CHECK(r.has_value() == (square_class(x) == SquareClass::One));
            if (r) CHECK(*r * *r == x);
        }
    }
}

TEST_CASE("teichmuller") {
    CHECK(teichmuller(3, 1) == Z(3, 1));
    CHECK(teichmuller(3, 2) == Z(3, -1));
    const PAdic w = teichmuller(7, 2);
    CHECK(mpz_class(w.unit() % 49) == 30);
    CHECK(w.pow(6) == Z(7, 1));
    CHECK_THROWS_AS(teichmuller(5, 10), MathError);
    for (int p : {3, 5, 7, 11, 13}) {
        for (long r = 1; r < p; ++r) CHECK(teichmuller(p, r).pow(p - 1) == Z(p, 1));
    }
}

TEST_CASE("hilbert symbol examples") {
    CHECK(hilbert_symbol(Z(3, -1), Z(3, -1)) == 1);
    CHECK(hilbert_symbol(Z(3, 3), Z(3, -1)) == -1);
    CHECK(hilbert_symbol(Z(5, 5), Z(5, 2)) == -1);
}

TEST_CASE("hilbert symbol is symmetric and bimultiplicative") {
    std::mt19937_64 rng(11);
    for (int p : {3, 5, 7}) {
        std::vector<PAdic> xs;
        for (auto c : {SquareClass::One, SquareClass::U, SquareClass::Pi, SquareClass::UPi}) {
            xs.push_back(square_class_representative(p, c));
        }
        for (int i = 0; i < 8; ++i) {
            long long n = static_cast<long long>(rng() % 5000) + 1;
            if (rng() % 2) n = -n;
            xs.push_back(Z(p, n));
        }
        for (const auto& a : xs) {
            for (const auto& a2 : xs) {
                for (const auto& b : xs) {
                    CHECK(hilbert_symbol(a * a2, b) == hilbert_symbol(a, b) * hilbert_symbol(a2, b));
                }
            }
            for (const auto& b : xs) CHECK(hilbert_symbol(a, b) == hilbert_symbol(b, a));
        }
    }
}

TEST_CASE("precision tracking") {
    const PAdic a = Z(3, 1);
    const PAdic b = PAdic::from_parts(3, 0, 1 + 81, 24);
    // 82 - 1 = 81: four digits cancel, the remaining 20 are kept.
    const PAdic d = b - a;
    CHECK(d.valuation() == 4);
    CHECK(d.digits() == 20);
    // Exact cancellation is an exact zero.
    CHECK((a - a).is_zero());
    const PAdic c = PAdic::from_parts(3, 0, 1 + pow_p(3, 22), 24);
    CHECK_THROWS_AS(c - a, PrecisionUnderflow);
    CHECK_NOTHROW(c.add_relaxed(-a));
}

TEST_CASE("rendering") {
    CHECK(Z(3, 18).str() == "3^2 * 2 (mod 3^24)");
    CHECK(PAdic::zero(3).str() == "0");
}

TEST_CASE("invalid primes") {
    CHECK_THROWS_AS(PAdic::from_int(4, 1), MathError);
    CHECK_THROWS_AS(PAdic::from_int(2, 1), MathError);
}

TEST_CASE("cyclo values") {
    const Cyclo a(1, 4), b(3, 4);
    CHECK((a + b).is_zero());
    CHECK((a + a) == Cyclo(1, 2));
    CHECK((-a) == b);
    CHECK(Cyclo(5, 4) == a);
    CHECK(Cyclo(-1, 4) == b);
    CHECK(a.order() == 4);
    CHECK(Cyclo::parse("3/6") == Cyclo(1, 2));
    CHECK(Cyclo::parse("0").is_zero());
    CHECK(Cyclo(2, 4).str() == "1/2");
    CHECK(farey_values(2).size() == 2);
    CHECK(farey_values(8).size() == 22);
    CHECK_THROWS(Cyclo::parse("a/b"));
}

TEST_CASE("residue field tables") {
    auto f3 = ResidueField::prime_field(3);
    CHECK(f3->generator() == 2);
    auto f9 = ResidueField::quadratic(f3, 2);
    CHECK(f9->q() == 9);
    for (ResidueField::Elem a = 1; a < 9; ++a) {
        CHECK(f9->mul(a, f9->inv(a)) == 1);
        CHECK(f9->exp(f9->log(a)) == a);
    }
    CHECK_THROWS_AS(ResidueField::quadratic(f3, 1), MathError);
    auto f81 = ResidueField::quadratic(f9, f9->generator());
    CHECK(f81->q() == 81);
    ResidueField::Elem r = 0;
    CHECK(f81->sqrt(f81->mul(5, 5), r));
    CHECK(f81->mul(r, r) == f81->mul(5, 5));
}
