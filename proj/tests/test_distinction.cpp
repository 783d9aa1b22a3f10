#include <map>
#include <set>

#include "doctest.h"
#include "gl2dist/distinction.hpp"
#include "gl2dist/errors.hpp"

using namespace gl2dist;

namespace {

struct Q3 {
    FieldPtr F = Field::base(3);
    // The three presentations of F(√-1, √3) with K = F(√u), F(√p), F(√up).
    std::vector<Lattice> biquads() const {
        std::vector<Lattice> out;
        for (const auto& [d, dp] : {std::pair{-1, 3}, std::pair{3, -1}, std::pair{-3, 3}}) {
            auto K = make_quadratic(F, F->from_int(d), "K");
            out.push_back(build_lattice(K, K->from_int(dp)));
        }
        return out;
    }
    Lattice cyclic() const {
        auto K = make_quadratic(F, F->from_int(-1), "K");
        return build_lattice(K, nonsquare_unit(K));
    }
    Lattice nongalois() const {
        auto K = make_quadratic(F, F->from_int(3), "K");
        return build_lattice(K, K->generator());
    }
};

}  // namespace

TEST_CASE("biquadratic verdicts: plus test, flicker, witnesses") {
    Q3 q;
    int dist = 0, eta_dist = 0, not_dist = 0;
    for (const Lattice& lat : q.biquads()) {
        REQUIRE(lat.type == GaloisType::Biquadratic);
        const BiquadLattice& b = *lat.biquad;
        for (const MultChar& omega : enumerate_chars(lat.L, {8})) {
            const DihedralDatum d = make_datum(lat, omega);
            const Verdict v = decide_dihedral(d);
            CHECK(v.regular == d.regular);
            if (v.verdict != VerdictKind::NotDistinguished) CHECK(v.plus_distinguished);
            if (d.regular) {
                CHECK(plus_distinguished(d).value == flicker_condition(d));
                CHECK(v.plus_distinguished == plus_distinguished(d).value);
                // Direct restriction comparison against the χ′-twist path.
                const MultChar chi = extend_character(eta(lat.K_F), lat.K_F);
                const MultChar twisted = omega + compose_with_norm(chi, lat.L_K);
                const bool twist_dist = decide_dihedral(make_datum(lat, twisted)).verdict == VerdictKind::Distinguished;
                CHECK((v.verdict == VerdictKind::EtaDistinguished) == twist_dist);
                dist += v.verdict == VerdictKind::Distinguished;
                eta_dist += v.verdict == VerdictKind::EtaDistinguished;
                not_dist += v.verdict == VerdictKind::NotDistinguished;
            } else {
                CHECK_THROWS_AS(plus_distinguished(d), MathError);
                // Non-regular bridge: restriction to K′ or K″ trivial iff (μ, μη) trivial on K̃* or F*×F*.
                const bool restricts = restrict(omega, b.L_Kp.inclusion).is_trivial() || restrict(omega, b.L_Kpp.inclusion).is_trivial();
                const MultChar mu = descend(omega, lat.L_K)[0];
                CHECK(restricts == ps_distinguished({mu, mu + eta(lat.L_K)}, lat.K_F).value);
            }
            if (v.plus_distinguished) CHECK(restrict(central_character(omega, lat.L_K), lat.K_F.inclusion).is_trivial());
            CHECK(decide_dihedral(make_datum(lat, conjugate_char(omega, lat.L_K.conjugation))).verdict == v.verdict);
        }
    }
    CHECK(dist >= 1);
    CHECK(eta_dist >= 1);
    CHECK(not_dist >= 1);
}

TEST_CASE("witness strings name the restriction") {
    Q3 q;
    std::set<std::string> seen;
    for (const Lattice& lat : q.biquads()) {
        const BiquadLattice& b = *lat.biquad;
        const MultChar triv_kp = trivial_char(b.Kp), triv_kpp = trivial_char(b.Kpp);
        const std::map<std::string, std::pair<const QuadraticPair*, MultChar>> expect = {
            {"omega|K'*=1", {&b.L_Kp, triv_kp}},
            {"omega|K''*=1", {&b.L_Kpp, triv_kpp}},
            {"omega|K'*=eta_{L/K'}", {&b.L_Kp, eta(b.L_Kp)}},
            {"omega|K''*=eta_{L/K''}", {&b.L_Kpp, eta(b.L_Kpp)}},
        };
        for (const MultChar& omega : enumerate_chars(lat.L, {8})) {
            const DihedralDatum d = make_datum(lat, omega);
            if (!d.regular) continue;
            const Verdict v = decide_dihedral(d);
            if (!v.plus_distinguished) continue;
            const auto it = expect.find(v.witness);
            REQUIRE(it != expect.end());
            CHECK(restrict(omega, it->second.first->inclusion) == it->second.second);
            CHECK((v.verdict == VerdictKind::Distinguished) == it->second.second.is_trivial());
            seen.insert(v.witness);
        }
    }
    CHECK(seen.size() == 4);
}

TEST_CASE("flicker on the trivial character") {
    Q3 q;
    for (const Lattice& lat : q.biquads()) CHECK(flicker_condition(make_datum(lat, trivial_char(lat.L))));
}

TEST_CASE("twists trivial on F* keep the plus verdict") {
    Q3 q;
    const Lattice lat = q.biquads()[0];
    EnumConstraints c{4};
    c.trivial_on = image_subgroup(lat.K_F.inclusion);
    const auto twists = enumerate_chars(lat.K, c);
    REQUIRE(twists.size() > 1);
    for (const MultChar& omega : enumerate_chars(lat.L, {4})) {
        const bool plus = decide_dihedral(make_datum(lat, omega)).plus_distinguished;
        for (const MultChar& chi : twists) {
            CHECK(decide_dihedral(make_datum(lat, omega + compose_with_norm(chi, lat.L_K))).plus_distinguished == plus);
        }
    }
}

TEST_CASE("cyclic quartic") {
    Q3 q;
    const Lattice lat = q.cyclic();
    REQUIRE(lat.type == GaloisType::Cyclic);
    int regular = 0, four = 0;
    for (const MultChar& omega : enumerate_chars(lat.L, {8})) {
        const DihedralDatum d = make_datum(lat, omega);
        const Verdict v = decide_dihedral(d);
        if (d.regular) {
            ++regular;
            CHECK_FALSE(plus_distinguished(d).value);
            CHECK_FALSE(flicker_condition(d));
            CHECK(v.verdict == VerdictKind::NotDistinguished);
        } else {
            // Dual-generator cross-check: distinguished iff μ|F* has order 4 in the norm dual.
            const MultChar mu = descend(omega, lat.L_K)[0];
            const auto ord = order_in_norm_dual(restrict(mu, lat.K_F.inclusion), lat.L_K, lat.K_F);
            CHECK((v.verdict == VerdictKind::Distinguished) == (ord && *ord == 4));
            four += ord && *ord == 4;
        }
    }
    CHECK(regular > 0);
    CHECK(four > 0);
    CHECK(enumerate_verdicts(lat, 8, true).distinguished == 0);
}

TEST_CASE("principal series criteria") {
    Q3 q;
    auto K = make_quadratic(q.F, q.F->from_int(3), "K");
    const QuadraticPair kf = tower_pair(K, "K/F");
    const auto chars = enumerate_chars(K, {8});
    for (const MultChar& lambda : chars) {
        for (const MultChar& mu : chars) CHECK(ps_distinguished({lambda, mu}, kf).value == algebra_criterion({lambda, mu}, kf));
        CHECK(ps_distinguished({lambda, -conjugate_char(lambda, kf.conjugation)}, kf).value);
    }
    CHECK(ps_distinguished({trivial_char(K), trivial_char(K)}, kf).value);
    const MultChar ext = extend_character(eta(kf), kf);
    CHECK_FALSE(ps_distinguished({ext, trivial_char(K)}, kf).value);
    CHECK(assumed_irreducible({ext, trivial_char(K)}));
}

TEST_CASE("non-Galois reduction") {
    Q3 q;
    const Lattice lat = q.nongalois();
    REQUIRE(lat.type == GaloisType::NonGalois);
    const NonGaloisLattice& ng = *lat.nongalois;
    int regular_over_b = 0, reduced = 0;
    for (const MultChar& omega : enumerate_chars(lat.L, {8})) {
        const DihedralDatum d = make_datum(lat, omega);
        const Reduction r = base_change_reduce(d);
        if (!d.regular) {
            REQUIRE_FALSE(r.regular_over_B);
            for (const MultChar& mu : descend(omega, lat.L_K)) {
                const MultChar lifted = compose_with_norm(mu, ng.B.L_K);
                CHECK((r.mu_prime[0] == lifted || r.mu_prime[1] == lifted));
            }
            continue;
        }
        CHECK(plus_distinguished(d).value == flicker_condition(d));
        if (r.regular_over_B) {
            ++regular_over_b;
            CHECK_FALSE(plus_distinguished(d).value);
        } else {
            ++reduced;
            CHECK(plus_distinguished(d).value == flicker_biquadratic(ng.B, r.mu_prime[0]));
            CHECK(compose_with_norm(r.mu_prime[0], ng.M_B) == compose_with_norm(omega, ng.M_L));
        }
    }
    // M/L is unramified and τ(π_M)/π_M = -1 is a residue square, so tame lifts are always B-invariant.
    CHECK(regular_over_b == 0);
    const Reduction triv = base_change_reduce(make_datum(lat, trivial_char(lat.L)));
    CHECK(triv.mu_prime[0].is_trivial());
    CHECK_THROWS_AS(base_change_reduce(make_datum(q.biquads()[0], trivial_char(q.biquads()[0].L))), MathError);
    CHECK(reduced > 0);
}

TEST_CASE("enumerate_verdicts is deterministic and deduplicated") {
    Q3 q;
    const Lattice lat = q.biquads()[1];
    const VerdictTable a = enumerate_verdicts(lat, 8), b = enumerate_verdicts(lat, 8);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].omega == b.rows[i].omega);
        CHECK(a.rows[i].verdict.witness == b.rows[i].verdict.witness);
    }
    CHECK(a.distinguished + a.eta_distinguished + a.not_distinguished == static_cast<int>(a.rows.size()));
    CHECK(a.distinguished >= 1);
    CHECK(a.eta_distinguished >= 1);
    const std::size_t all = enumerate_chars(lat.L, {8}).size();
    CHECK(a.rows.size() < all);
    CHECK(2 * a.rows.size() >= all);
}
