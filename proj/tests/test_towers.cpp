#include <random>

#include "doctest.h"
#include "gl2dist/errors.hpp"
#include "gl2dist/towers.hpp"

using namespace gl2dist;

namespace {

FieldElement random_element(const FieldPtr& f, std::mt19937_64& rng, int bound = 40) {
    std::vector<long long> cs(static_cast<std::size_t>(f->degree()));
    for (auto& c : cs) c = static_cast<long long>(rng() % (2 * bound + 1)) - bound;
    return f->element(cs);
}

FieldElement random_nonzero(const FieldPtr& f, std::mt19937_64& rng) {
    for (;;) {
        FieldElement x = random_element(f, rng);
        if (!x.is_zero()) return x;
    }
}

// Determinant over Q_p of multiplication by x, by Gaussian elimination.
PAdic multiplication_determinant(const FieldElement& x) {
    const FieldPtr& E = x.field();
    const std::size_t n = static_cast<std::size_t>(E->degree());
    std::vector<std::vector<PAdic>> m(n, std::vector<PAdic>(n));
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<long long> basis(n, 0);
        basis[j] = 1;
        const FieldElement col = x * E->element(basis);
        for (std::size_t i = 0; i < n; ++i) m[i][j] = col.coords()[i];
    }
    PAdic det = PAdic::from_int(E->p(), 1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        int best = kInfiniteValuation;
        for (std::size_t r = c; r < n; ++r) {
            if (!m[r][c].is_zero() && m[r][c].valuation() < best) {
                best = m[r][c].valuation();
                piv = r;
            }
        }
        REQUIRE(piv < n);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det = det * m[c][c];
        const PAdic inv = m[c][c].inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c].is_zero()) continue;
            const PAdic f = m[r][c] * inv;
            for (std::size_t k = c; k < n; ++k) m[r][k] = m[r][k].add_relaxed(-(f * m[c][k]));
        }
    }
    return det;
}

}  // namespace

TEST_CASE("make_quadratic") {
    auto F = Field::base(3);
    auto K = make_quadratic(F, F->from_int(-1), "K");
    CHECK(K->q() == 9);
    CHECK(K->ramification() == 1);
    auto R = make_quadratic(F, F->from_int(3), "R");
    CHECK(R->q() == 3);
    CHECK(R->ramification() == 2);
    CHECK(R->uniformizer() == R->generator());
    CHECK_THROWS_AS(make_quadratic(F, F->from_int(4), "X"), MathError);
}

TEST_CASE("norms and traces") {
    auto F = Field::base(3);
    auto biq = biquad_lattice(F, F->from_int(-1), F->from_int(3));
    // K = Q3(√-1): N(a + b√-1) = a² + b².
    CHECK(biq.K_F.norm(biq.K->element({2, 5})) == F->from_int(29));
    // L = K(√3): N_{L/K}(√3) = -3.
    CHECK(biq.L_K.norm(biq.L->generator()) == biq.K->from_int(-3));
    CHECK(biq.K_F.trace(biq.K->generator()).is_zero());
    CHECK(biq.K_F.trace(biq.K->from_int(7)) == F->from_int(14));
    // The traceless element of K is traceless for L over K′ and K″ too.
    const FieldElement a = biq.L_K.inclusion(find_traceless(biq.K_F));
    CHECK(biq.L_Kp.trace(a).is_zero());
    CHECK(biq.L_Kpp.trace(a).is_zero());
    const FieldElement a2 = find_traceless(biq.K_F) * find_traceless(biq.K_F);
    CHECK(a2 == biq.K->from_base(a2.lower()));
}

TEST_CASE("norm of 1 + √-1·√3 matches the multiplication determinant") {
    auto F = Field::base(3);
    auto biq = biquad_lattice(F, F->from_int(-1), F->from_int(3));
    const FieldElement x = biq.L->element({1, 0, 0, 1});
    const FieldElement nk = biq.L_Kp.norm(x);
    // det over Q_p of multiplication by x equals N_{K'/F}(N_{L/K'}(x)).
    CHECK(biq.Kp_F.norm(nk).coords()[0] == multiplication_determinant(x));
}

TEST_CASE("norm laws on random elements") {
    std::mt19937_64 rng(17);
    for (int p : {3, 5, 7}) {
        auto F = Field::base(p);
        const long long u = least_nonresidue(p);
        for (auto [d, dp] : {std::pair<long long, long long>{u, p}, {p, u}, {u * p, u}}) {
            auto biq = biquad_lattice(F, F->from_int(d), F->from_int(dp));
            for (int i = 0; i < 50; ++i) {
                const FieldElement x = random_nonzero(biq.L, rng), y = random_nonzero(biq.L, rng);
                const FieldElement via_kp = biq.Kp_F.norm(biq.L_Kp.norm(x));
                const FieldElement via_k = biq.K_F.norm(biq.L_K.norm(x));
                CHECK(via_kp == via_k);
                CHECK(via_k.coords()[0] == multiplication_determinant(x));
                CHECK(biq.L_K.norm(x * y) == biq.L_K.norm(x) * biq.L_K.norm(y));
            }
        }
    }
}

TEST_CASE("biquadratic conjugations") {
    std::mt19937_64 rng(23);
    auto F = Field::base(3);
    auto biq = biquad_lattice(F, F->from_int(3), F->from_int(-1));
    CHECK(biq.Kpp->step_constant() == F->from_int(-3));
    for (int i = 0; i < 20; ++i) {
        const FieldElement x = random_element(biq.L, rng);
        CHECK(biq.sigma(biq.sigma_p(x)) == biq.sigma_pp(x));
        CHECK(biq.sigma_p(biq.sigma_p(x)) == x);
        const FieldElement kp = random_element(biq.Kp, rng);
        CHECK(biq.sigma_p(biq.L_Kp.inclusion(kp)) == biq.L_Kp.inclusion(kp));
        // σ′ and σ″ restrict to θ on K.
        const FieldElement k = random_element(biq.K, rng);
        const FieldElement theta_k = biq.L_K.inclusion(biq.K_F.conjugation(k));
        CHECK(biq.sigma_p(biq.L_K.inclusion(k)) == theta_k);
        CHECK(biq.sigma_pp(biq.L_K.inclusion(k)) == theta_k);
        // N_{L/K}(K′*) = N_{K′/F}(K′*).
        if (!kp.is_zero()) {
            CHECK(biq.L_K.norm(biq.L_Kp.inclusion(kp)) == biq.K->from_base(biq.Kp_F.norm(kp)));
        }
    }
    CHECK(conjugation(biq, Subfield::Kp) == biq.sigma_p);
    CHECK(biq.sigma_p(biq.L->from_base(biq.K->generator())) == -biq.L->from_base(biq.K->generator()));
}

TEST_CASE("biquad_lattice examples") {
    auto F5 = Field::base(5);
    auto b5 = biquad_lattice(F5, F5->from_int(5), F5->from_int(2));
    CHECK(b5.Kpp->step_constant() == F5->from_int(10));
    CHECK(b5.L_Kpp.inclusion(b5.Kpp->generator()) * b5.L_Kpp.inclusion(b5.Kpp->generator()) == b5.L->from_int(10));
    auto F3 = Field::base(3);
    CHECK_THROWS_AS(biquad_lattice(F3, F3->from_int(3), F3->from_int(12)), MathError);
    CHECK_THROWS_AS(biquad_lattice(F3, F3->from_int(4), F3->from_int(3)), MathError);
}

TEST_CASE("galois_type examples") {
    auto F3 = Field::base(3);
    auto K3 = make_quadratic(F3, F3->from_int(3), "K");
    CHECK(galois_type(make_quadratic(K3, K3->from_int(-1), "L")) == GaloisType::Biquadratic);
    CHECK(galois_type(make_quadratic(K3, K3->generator(), "L")) == GaloisType::NonGalois);
    auto F5 = Field::base(5);
    auto K5 = make_quadratic(F5, F5->from_int(5), "K");
    CHECK(galois_type(make_quadratic(K5, K5->generator(), "L")) == GaloisType::Cyclic);
    auto U = make_quadratic(F3, F3->from_int(-1), "U");
    CHECK(galois_type(make_quadratic(U, nonsquare_unit(U), "L")) == GaloisType::Cyclic);
}

TEST_CASE("galois_type agrees with the primitive-element polynomial") {
    // Each automorphism sends γ = s + t to a root of (X² + d - e0)² - d(2X + e1)².
    auto F = Field::base(3);
    auto K = make_quadratic(F, F->from_int(3), "K");
    for (const FieldElement& e : {K->generator(), K->from_int(-1), K->element({1, 1})}) {
        if (K->is_square(e)) continue;
        auto L = make_quadratic(K, e, "L");
        const FieldElement gamma = L->from_base(K->generator()) + L->generator();
        const FieldElement d = L->from_int(3), e0 = L->scalar(e.coords()[0]), e1 = L->scalar(e.coords()[1]);
        for (const auto& a : automorphisms(L)) {
            const FieldElement x = a(gamma);
            const FieldElement lhs = (x * x + d - e0) * (x * x + d - e0);
            const FieldElement rhs = d * (x + x + e1) * (x + x + e1);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("non-Galois closure") {
    for (int p : {3, 7}) {
        auto F = Field::base(p);
        auto K = make_quadratic(F, F->from_int(p), "K");
        auto L = make_quadratic(K, K->generator(), "L");
        const NonGaloisLattice ng = nongalois_closure(L);
        CHECK(ng.automorphisms.size() == 8);
        CHECK(has_dihedral_signature(ng.automorphisms));
        CHECK(ng.M->step_constant() == ng.L->from_int(-1));
        CHECK(ng.B.K == K);
        CHECK(ng.B.dp == F->from_int(-1));
        // M is generated by the images of L and L′, which differ.
        CHECK_FALSE(ng.L_to_M.in_image(ng.Lp_to_M(ng.Lp->generator())));
        // θ̃ extends θ and maps L onto L′.
        CHECK(ng.theta_tilde(ng.L->from_base(K->generator())) == -ng.M->from_base(K->generator()));
        CHECK(ng.Lp_to_M.in_image(ng.theta_tilde(ng.L->generator())));
    }
    auto F5 = Field::base(5);
    auto K5 = make_quadratic(F5, F5->from_int(5), "K");
    CHECK_THROWS_AS(nongalois_closure(make_quadratic(K5, K5->generator(), "L")), MathError);
}

TEST_CASE("lattice embeddings") {
    auto F = Field::base(3);
    auto K = make_quadratic(F, F->from_int(3), "K");
    const Lattice lat = build_lattice(K, K->from_int(-1));
    REQUIRE(lat.biquad);
    const auto& b = *lat.biquad;
    CHECK(embed(lat, b.L, b.Kp->generator()) == b.L->generator());
    CHECK(embed(lat, b.L, F->from_int(5)) == b.L->element({5, 0, 0, 0}));
    const FieldElement kpp = embed(lat, b.L, b.Kpp->generator());
    CHECK(kpp * kpp == b.L->from_int(-3));
    CHECK_THROWS_AS(lat.embedding(b.L, b.Kp), MathError);

    const Lattice ng = build_lattice(K, K->generator());
    REQUIRE(ng.nongalois);
    const auto& n = *ng.nongalois;
    const FieldElement kp = embed(ng, n.M, n.B.Kp->generator());
    CHECK(kp * kp == n.M->from_base(n.B.dp));
}

TEST_CASE("re-presented biquadratic lattice") {
    // Over an unramified K, K(√π_K) = K(√3) has its constant in F already.
    auto F = Field::base(3);
    auto K = make_quadratic(F, F->from_int(-1), "K");
    const Lattice lat = build_lattice(K, K->from_int(3));
    CHECK(lat.type == GaloisType::Biquadratic);
    CHECK(lat.biquad->dp == F->from_int(3));
    // A constant outside F in the same class as 3 is re-presented by 3.
    const Lattice lat2 = build_lattice(K, K->from_int(12));
    CHECK(lat2.biquad->dp == F->from_int(12));
    auto R = make_quadratic(F, F->from_int(3), "R");
    const Lattice lat3 = build_lattice(R, R->element({-1, 3}));  // -1 + 3√3 = -(1 - 3√3), class of -1
    CHECK(lat3.type == GaloisType::Biquadratic);
    CHECK(lat3.biquad->dp == F->from_int(2));
}
