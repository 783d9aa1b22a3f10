#include <random>

#include "doctest.h"
#include "gl2dist/distinction.hpp"
#include "gl2dist/epsilon.hpp"
#include "gl2dist/errors.hpp"

using namespace gl2dist;

namespace {

constexpr double kTol = 1e-9;

std::vector<Lattice> biquads(int p) {
    auto F = Field::base(p);
    const long long u = least_nonresidue(p);
    std::vector<Lattice> out;
    for (const auto& [d, dp] : {std::pair{u, static_cast<long long>(p)}, std::pair{static_cast<long long>(p), u},
                                std::pair{u * p, static_cast<long long>(p)}}) {
        auto K = make_quadratic(F, F->from_int(d), "K");
        out.push_back(build_lattice(K, K->from_int(dp)));
    }
    return out;
}

std::vector<QuadraticPair> all_pairs(int p) {
    std::vector<QuadraticPair> out;
    for (const Lattice& lat : biquads(p)) {
        const BiquadLattice& b = *lat.biquad;
        for (const QuadraticPair* pr : {&b.K_F, &b.Kp_F, &b.Kpp_F, &b.L_K, &b.L_Kp, &b.L_Kpp}) out.push_back(*pr);
    }
    auto F = Field::base(p);
    auto U = make_quadratic(F, F->from_int(least_nonresidue(p)), "K");
    const Lattice cyc = build_lattice(U, nonsquare_unit(U));
    out.push_back(cyc.L_K);
    if (p % 4 == 3) {
        auto R = make_quadratic(F, F->from_int(p), "K");
        const Lattice ng = build_lattice(R, R->generator());
        const NonGaloisLattice& n = *ng.nongalois;
        for (const QuadraticPair* pr : {&n.L_K, &n.Lp_K, &n.M_L, &n.M_B, &n.B.L_Kp}) out.push_back(*pr);
    }
    return out;
}

EnumConstraints trivial_below(const QuadraticPair& pr, int max_den = 8) {
    EnumConstraints c;
    c.max_denominator = max_den;
    c.trivial_on = image_subgroup(pr.inclusion);
    return c;
}

}  // namespace

TEST_CASE("additive characters") {
    std::mt19937_64 rng(5);
    auto F = Field::base(3);
    auto K = make_quadratic(F, F->from_int(3), "K");
    const QuadraticPair kf = tower_pair(K, "K/F");
    const AdditiveChar psi = standard_additive(K);
    CHECK(psi.level == 1);
    CHECK(standard_additive(F).level == 0);
    CHECK(standard_additive(F)(F->element({1}).scaled(PAdic::from_rational(3, 1, 9))) == Cyclo(1, 9));
    CHECK(twist_additive(psi, K->one()).level == psi.level);
    const AdditiveChar psi_a = twist_additive(psi, find_traceless(kf));
    for (int i = 0; i < 30; ++i) {
        const long long n = static_cast<long long>(rng() % 200) - 100;
        const PAdic scale = PAdic::from_rational(3, 1, 27);
        CHECK(psi_a(K->from_int(n).scaled(scale)).is_zero());
    }
    // ψ trivial on P^{-level}, not on P^{-level-1}.
    for (const FieldElement& b : {K->one(), K->uniformizer(), K->uniformizer().pow(-2)}) {
        const AdditiveChar tw = twist_additive(psi, b);
        CHECK(tw.level == psi.level + K->valuation(b));
        bool nontrivial = false;
        for (ResidueField::Elem r = 1; r < K->q(); ++r) {
            CHECK(tw(K->lift(r) * K->uniformizer().pow(-tw.level)).is_zero());
            nontrivial = nontrivial || !tw(K->lift(r) * K->uniformizer().pow(-tw.level - 1)).is_zero();
        }
        CHECK(nontrivial);
    }
    CHECK_THROWS_AS(twist_additive(psi, K->zero()), MathError);
}

TEST_CASE("Gauss-sum epsilon basics") {
    auto F = Field::base(3);
    CHECK(std::abs(*gauss_epsilon(trivial_char(F), standard_additive(F)).approx - 1.0) < kTol);
    // Quadratic character of F_3*: ε² = χ(-1) = -1, so ε = ±i.
    const MultChar quad = make_char(F, Cyclo(), 1);
    const std::complex<double> e = *gauss_epsilon(quad, standard_additive(F)).approx;
    CHECK(std::abs(std::abs(e) - 1.0) < kTol);
    CHECK(std::abs(e * e + 1.0) < kTol);
}

TEST_CASE("Gauss-sum epsilon: unit modulus and the inverse pairing") {
    for (int p : {3, 5}) {
        for (const Lattice& lat : biquads(p)) {
            for (const FieldPtr& E : {lat.F, lat.K, lat.L}) {
                const AdditiveChar psi = standard_additive(E);
                const AdditiveChar psi_bar = twist_additive(psi, E->from_int(-1));
                for (const MultChar& chi : enumerate_chars(E, {4})) {
                    const std::complex<double> a = *gauss_epsilon(chi, psi).approx;
                    const std::complex<double> b = *gauss_epsilon(-chi, psi_bar).approx;
                    CHECK(std::abs(std::abs(a) - 1.0) < kTol);
                    CHECK(std::abs(std::abs(a * b) - 1.0) < kTol);
                    CHECK(std::abs(a * b - 1.0) < kTol);
                }
            }
        }
    }
}

TEST_CASE("Fröhlich-Queyrut agrees with the Gauss sums") {
    for (int p : {3, 5}) {
        int checked = 0;
        for (const QuadraticPair& pr : all_pairs(p)) {
            const AdditiveChar psi = standard_additive(pr.top);
            for (const MultChar& chi : enumerate_chars(pr.top, trivial_below(pr))) {
                const Cyclo fq = *fq_epsilon(chi, pr).exact;
                CHECK(std::abs(*gauss_epsilon(chi, psi).approx - to_complex(fq)) < kTol);
                // Δ ↦ cΔ for c in the lower field does not move the value.
                const FieldElement c = pr.inclusion(pr.bottom->uniformizer() + pr.bottom->one());
                CHECK(*fq_epsilon(chi, pr, c * find_traceless(pr)).exact == fq);
                ++checked;
            }
            CHECK(fq_epsilon(trivial_char(pr.top), pr).exact->is_zero());
        }
        CHECK(checked > 20);
    }
}

TEST_CASE("fq_epsilon refuses outside its regime") {
    auto F = Field::base(3);
    const QuadraticPair kf = tower_pair(make_quadratic(F, F->from_int(3), "K"), "K/F");
    CHECK_THROWS_AS(fq_epsilon(make_char(kf.top, Cyclo(1, 4), 0), kf), RegimeRefusal);
    CHECK_THROWS_AS(fq_epsilon(trivial_char(kf.top), kf, kf.top->one()), MathError);
}

TEST_CASE("lambda factor") {
    for (int p : {3, 5, 7}) {
        for (const Lattice& lat : biquads(p)) {
            const EpsilonValue l = lambda_factor(lat.L_K, lat.K_F);
            CHECK(l.exact->times(2).is_zero());
            const std::complex<double> g = *gauss_epsilon(eta(lat.L_K), standard_additive(lat.K)).approx;
            CHECK(std::abs(g - to_complex(*l.exact)) < kTol);
        }
    }
    auto F = Field::base(3);
    auto K = make_quadratic(F, F->from_int(3), "K");
    const Lattice lat = build_lattice(K, K->from_int(-1));
    CHECK(*lambda_factor(lat.L_K, lat.K_F).exact == eval(eta(lat.L_K), K->generator()));
    auto U = make_quadratic(F, F->from_int(-1), "K");
    const Lattice cyc = build_lattice(U, nonsquare_unit(U));
    CHECK_THROWS_AS(lambda_factor(cyc.L_K, cyc.K_F), RegimeRefusal);
}

TEST_CASE("Hakim chain against the verdicts") {
    for (int p : {3, 5}) {
        int exact_runs = 0;
        for (const Lattice& lat : biquads(p)) {
            const BiquadLattice& b = *lat.biquad;
            for (const MultChar& omega : enumerate_chars(lat.L, {8})) {
                const DihedralDatum d = make_datum(lat, omega);
                const Verdict v = decide_dihedral(d);
                const MultChar rp = restrict(omega, b.L_Kp.inclusion), rpp = restrict(omega, b.L_Kpp.inclusion);
                if (rp.is_trivial() || rpp.is_trivial()) {
                    const HakimReport h = hakim_check(b, omega, 8, true);
                    ++exact_runs;
                    CHECK(!h.rows.empty());
                    for (const TwistRow& row : h.rows) CHECK(std::abs(*row.approx - to_complex(row.epsilon)) < kTol);
                    if (d.regular) CHECK(h.holds == (v.verdict == VerdictKind::Distinguished));
                    else CHECK(h.holds);
                } else {
                    CHECK_THROWS_AS(hakim_check(b, omega, 8), RegimeRefusal);
                }
                if (d.regular && v.verdict == VerdictKind::EtaDistinguished) {
                    const MultChar chi = extend_character(eta(lat.K_F), lat.K_F);
                    CHECK(hakim_check(b, omega + compose_with_norm(chi, lat.L_K), 8).holds);
                }
                if (d.regular) {
                    // Gauss sums only: all twists give 1 and c|F* = 1 exactly for the distinguished ω.
                    bool all_one = restrict(central_character(omega, lat.L_K), lat.K_F.inclusion).is_trivial();
                    for (const auto& z : hakim_chain_numeric(b, omega, 8)) all_one = all_one && std::abs(z - 1.0) < kTol;
                    CHECK(all_one == (v.verdict == VerdictKind::Distinguished));
                }
            }
        }
        CHECK(exact_runs > 0);
    }
}
