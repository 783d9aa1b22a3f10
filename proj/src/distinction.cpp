#include "gl2dist/distinction.hpp"

#include <tuple>

#include "gl2dist/errors.hpp"

namespace gl2dist {

std::string to_string(VerdictKind v) {
    switch (v) {
        case VerdictKind::Distinguished: return "distinguished";
        case VerdictKind::EtaDistinguished: return "eta-distinguished";
        case VerdictKind::NotDistinguished: return "not-distinguished";
    }
    return "?";
}

DihedralDatum make_datum(const Lattice& lat, const MultChar& omega) {
    if (omega.field != lat.L) throw MathError("omega must be a character of L");
    return {&lat, omega, is_regular(omega, lat.L_K)};
}

// --------------------------------------------------------------- biquadratic

Decision plus_biquadratic(const BiquadLattice& lat, const MultChar& omega) {
    if (trivial_on(omega, norm_subgroup(lat.L_Kp, lat.L_Kp.inclusion))) return {true, "omega trivial on N_{L/K'}(L*)"};
    if (trivial_on(omega, norm_subgroup(lat.L_Kpp, lat.L_Kpp.inclusion))) return {true, "omega trivial on N_{L/K''}(L*)"};
    return {false, "omega nontrivial on N_{L/K'}(L*) and on N_{L/K''}(L*)"};
}

bool flicker_biquadratic(const BiquadLattice& lat, const MultChar& omega) {
    const bool dual = conjugate_char(omega, lat.sigma_p) == -omega || conjugate_char(omega, lat.sigma_pp) == -omega;
    return dual && restrict(central_character(omega, lat.L_K), lat.K_F.inclusion).is_trivial();
}

namespace {

Verdict principal_series_verdict(const MultChar& omega, const QuadraticPair& L_K, const QuadraticPair& K_F) {
    const std::vector<MultChar> mus = descend(omega, L_K);
    const MultChar& mu = mus[0];
    const MultChar mu_eta = mu + eta(L_K);
    Verdict v;
    v.regular = false;
    const Decision direct = ps_distinguished({mu, mu_eta}, K_F);
    if (direct.value) {
        v.verdict = VerdictKind::Distinguished;
        v.witness = "principal series pi(mu, mu.eta), mu " + mu.str() + ": " + direct.witness;
    } else {
        // π is η_{K/F}-distinguished iff π ⊗ χ′ is distinguished, χ′ extending η_{K/F}.
        const MultChar chi = extend_character(eta(K_F), K_F);
        const Decision twisted = ps_distinguished({mu + chi, mu_eta + chi}, K_F);
        if (twisted.value) {
            v.verdict = VerdictKind::EtaDistinguished;
            v.witness = "principal series pi(mu, mu.eta), mu " + mu.str() + ": twist by chi' " + chi.str() + " gives " + twisted.witness;
        } else {
            v.verdict = VerdictKind::NotDistinguished;
            v.witness = "principal series pi(mu, mu.eta), mu " + mu.str() + ": neither branch, also after the chi' twist";
        }
    }
    v.plus_distinguished = v.verdict != VerdictKind::NotDistinguished;
    return v;
}

}  // namespace

Verdict decide_biquadratic(const BiquadLattice& lat, const MultChar& omega) {
    if (omega.field != lat.L) throw MathError("omega must be a character of L");
    if (!is_regular(omega, lat.L_K)) return principal_series_verdict(omega, lat.L_K, lat.K_F);
    Verdict v;
    v.regular = true;
    const Decision plus = plus_biquadratic(lat, omega);
    v.plus_distinguished = plus.value;
    if (!plus.value) {
        v.witness = plus.witness;
        return v;
    }
    const MultChar rp = restrict(omega, lat.L_Kp.inclusion);
    const MultChar rpp = restrict(omega, lat.L_Kpp.inclusion);
    if (rp.is_trivial()) {
        v.verdict = VerdictKind::Distinguished;
        v.witness = "omega|K'*=1";
    } else if (rpp.is_trivial()) {
        v.verdict = VerdictKind::Distinguished;
        v.witness = "omega|K''*=1";
    } else if (rp == eta(lat.L_Kp)) {
        v.verdict = VerdictKind::EtaDistinguished;
        v.witness = "omega|K'*=eta_{L/K'}";
    } else if (rpp == eta(lat.L_Kpp)) {
        v.verdict = VerdictKind::EtaDistinguished;
        v.witness = "omega|K''*=eta_{L/K''}";
    } else {
        throw MathError("inconsistent lattice: plus-distinguished without a matching restriction");
    }
    return v;
}

// ------------------------------------------------------------------- general

Reduction base_change_reduce(const DihedralDatum& d) {
    if (!d.lattice || !d.lattice->nongalois) throw MathError("base_change_reduce needs a non-Galois lattice");
    const NonGaloisLattice& ng = *d.lattice->nongalois;
    const MultChar lifted = compose_with_norm(d.omega, ng.M_L);
    if (is_regular(lifted, ng.M_B)) return {true, {}};
    return {false, descend(lifted, ng.M_B)};
}

MultChar base_change_variant(const NonGaloisLattice& ng, const MultChar& mu) {
    if (mu.field != ng.K) throw MathError("base_change_variant: mu must be a character of K");
    const MultChar mu_F = restrict(mu, ng.B.K_F.inclusion);
    return compose_with_norm(compose_with_norm(mu_F, ng.B.K_F), ng.B.L_K);
}

Decision plus_distinguished(const DihedralDatum& d) {
    if (!d.regular) throw MathError("plus_distinguished: omega is not regular (use decide_dihedral)");
    const Lattice& lat = *d.lattice;
    switch (lat.type) {
        case GaloisType::Biquadratic: return plus_biquadratic(*lat.biquad, d.omega);
        case GaloisType::Cyclic: return {false, "cyclic L/F: regularity excludes omega^theta~ = omega^-1"};
        case GaloisType::NonGalois: {
            const Reduction r = base_change_reduce(d);
            if (r.regular_over_B) return {false, "omega∘N_{M/L} is regular over B"};
            Decision inner = plus_biquadratic(lat.nongalois->B, r.mu_prime[0]);
            inner.witness = "via B, mu' " + r.mu_prime[0].str() + ": " + inner.witness;
            return inner;
        }
    }
    return {};
}

bool flicker_condition(const DihedralDatum& d) {
    const Lattice& lat = *d.lattice;
    switch (lat.type) {
        case GaloisType::Biquadratic: return flicker_biquadratic(*lat.biquad, d.omega);
        case GaloisType::Cyclic: {
            const FieldMap& th = *lat.theta_tilde;
            const FieldMap th3 = th.compose(th).compose(th);
            const bool dual = conjugate_char(d.omega, th) == -d.omega || conjugate_char(d.omega, th3) == -d.omega;
            return dual && restrict(central_character(d.omega, lat.L_K), lat.K_F.inclusion).is_trivial();
        }
        case GaloisType::NonGalois: {
            const Reduction r = base_change_reduce(d);
            if (r.regular_over_B) return false;
            return flicker_biquadratic(lat.nongalois->B, r.mu_prime[0]);
        }
    }
    return false;
}

Verdict decide_dihedral(const DihedralDatum& d) {
    const Lattice& lat = *d.lattice;
    if (!d.regular) return principal_series_verdict(d.omega, lat.L_K, lat.K_F);
    switch (lat.type) {
        case GaloisType::Biquadratic: return decide_biquadratic(*lat.biquad, d.omega);
        case GaloisType::Cyclic: {
            Verdict v;
            v.regular = true;
            v.witness = plus_distinguished(d).witness;
            return v;
        }
        case GaloisType::NonGalois: {
            const Reduction r = base_change_reduce(d);
            if (r.regular_over_B) {
                Verdict v;
                v.regular = true;
                v.witness = "omega∘N_{M/L} is regular over B";
                return v;
            }
            Verdict v = decide_biquadratic(lat.nongalois->B, r.mu_prime[0]);
            v.regular = true;
            v.witness = "via B, mu' " + r.mu_prime[0].str() + ": " + v.witness;
            return v;
        }
    }
    throw MathError("inconsistent lattice");
}

// ------------------------------------------------------------ principal series

bool assumed_irreducible(const PSParams&) { return true; }

Decision ps_distinguished(const PSParams& ps, const QuadraticPair& K_F) {
    if (ps.lambda.field != K_F.top || ps.mu.field != K_F.top) throw MathError("principal series characters must live on K");
    if ((ps.lambda + conjugate_char(ps.mu, K_F.conjugation)).is_trivial()) return {true, "lambda = mu^-theta"};
    if (restrict(ps.lambda, K_F.inclusion).is_trivial() && restrict(ps.mu, K_F.inclusion).is_trivial()) {
        return {true, "lambda|F* = mu|F* = 1"};
    }
    return {false, "lambda != mu^-theta and (lambda|F*, mu|F*) != (1, 1)"};
}

bool algebra_criterion(const PSParams& ps, const QuadraticPair& K_F) {
    const FieldPtr& K = K_F.top;
    const FieldPtr& F = K_F.bottom;
    bool on_twisted_diagonal = true;
    for (const FieldElement& x : {K->uniformizer(), K->teichmuller_generator()}) {
        if (!(eval(ps.lambda, x) + eval(ps.mu, K_F.conjugation(x))).is_zero()) on_twisted_diagonal = false;
    }
    if (on_twisted_diagonal) return true;
    for (const FieldElement& y : {F->uniformizer(), F->teichmuller_generator()}) {
        const FieldElement x = K_F.inclusion(y);
        if (!eval(ps.lambda, x).is_zero() || !eval(ps.mu, x).is_zero()) return false;
    }
    return true;
}

// ----------------------------------------------------------------- enumeration

VerdictTable enumerate_verdicts(const Lattice& lat, int max_denominator, bool regular_only) {
    VerdictTable table;
    EnumConstraints c;
    c.max_denominator = max_denominator;
    if (regular_only) c.regular_over = &lat.L_K;
    for (const MultChar& omega : enumerate_chars(lat.L, c)) {
        const MultChar conj = conjugate_char(omega, lat.L_K.conjugation);
        if (std::tie(conj.t, conj.m) < std::tie(omega.t, omega.m)) continue;
        const Verdict v = decide_dihedral(make_datum(lat, omega));
        switch (v.verdict) {
            case VerdictKind::Distinguished: ++table.distinguished; break;
            case VerdictKind::EtaDistinguished: ++table.eta_distinguished; break;
            case VerdictKind::NotDistinguished: ++table.not_distinguished; break;
        }
        table.rows.push_back({omega, v});
    }
    return table;
}

}  // namespace gl2dist
