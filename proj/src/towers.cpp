#include "gl2dist/towers.hpp"

#include <algorithm>
#include <functional>

#include "gl2dist/errors.hpp"

namespace gl2dist {

namespace {

// Signed integer value of an integral element of Q_p (the representative of least modulus).
std::string integer_str(const PAdic& x) {
    if (x.is_zero()) return "0";
    if (x.valuation() < 0) return x.str();
    const mpz_class mod = pow_p(x.prime(), x.valuation() + x.digits());
    mpz_class v = x.unit() * pow_p(x.prime(), x.valuation());
    v %= mod;
    if (v * 2 > mod) v -= mod;
    return v.get_str();
}

std::string base_str(const FieldElement& x) {
    if (x.field()->depth() != 0) return x.str();
    return integer_str(x.coords()[0]);
}

bool lies_in_base(const FieldElement& x) {
    const auto& cs = x.coords();
    return std::all_of(cs.begin() + static_cast<long>(cs.size() / 2), cs.end(), [](const PAdic& c) { return c.is_zero(); });
}

void require_base_field(const FieldPtr& F) {
    if (!F || F->depth() != 0) throw MathError("the base field must be Q_p");
}

}  // namespace

std::string to_string(GaloisType t) {
    switch (t) {
        case GaloisType::Biquadratic: return "Biquadratic";
        case GaloisType::Cyclic: return "Cyclic";
        case GaloisType::NonGalois: return "NonGalois";
    }
    return "?";
}

std::string to_string(Subfield s) {
    switch (s) {
        case Subfield::K: return "K";
        case Subfield::Kp: return "K'";
        case Subfield::Kpp: return "K''";
    }
    return "?";
}

// -------------------------------------------------------------- QuadraticPair

FieldElement QuadraticPair::norm(const FieldElement& x) const {
    if (x.field() != top) throw MathError("norm: element outside " + name);
    return inclusion.preimage(x * conjugation(x));
}

FieldElement QuadraticPair::trace(const FieldElement& x) const {
    if (x.field() != top) throw MathError("trace: element outside " + name);
    return inclusion.preimage(x + conjugation(x));
}

QuadraticPair make_pair(std::string name, FieldMap inclusion, FieldMap conjugation, FieldElement generator) {
    const FieldPtr top = inclusion.target();
    const FieldPtr bottom = inclusion.source();
    if (top->degree() != 2 * bottom->degree()) throw MathError(name + ": not a quadratic pair");
    if (conjugation.source() != top || conjugation.target() != top) throw MathError(name + ": conjugation is not an automorphism of the top field");
    if (!(conjugation.compose(inclusion) == inclusion)) throw MathError(name + ": conjugation moves the bottom field");
    if (conjugation.is_identity() || !conjugation.compose(conjugation).is_identity()) {
        throw MathError(name + ": conjugation is not a nontrivial involution");
    }
    if (!(conjugation(generator) == -generator)) throw MathError(name + ": generator is not traceless");
    QuadraticPair pair;
    pair.name = std::move(name);
    pair.top = top;
    pair.bottom = bottom;
    pair.constant = inclusion.preimage(generator * generator);
    pair.inclusion = std::move(inclusion);
    pair.conjugation = std::move(conjugation);
    pair.generator = std::move(generator);
    pair.norm_of_uniformizer = bottom->tame_coords(pair.norm(top->uniformizer()));
    pair.norm_of_teichmuller = bottom->tame_coords(pair.norm(top->teichmuller_generator()));
    return pair;
}

QuadraticPair tower_pair(const FieldPtr& top, std::string name) {
    if (top->depth() == 0) throw MathError("Q_p is not a quadratic extension");
    const FieldPtr bottom = top->base_field();
    FieldMap incl = FieldMap::inclusion(bottom, top);
    std::vector<FieldElement> images = incl.images();
    images.push_back(-top->generator());
    FieldMap conj(top, top, std::move(images));
    return make_pair(std::move(name), std::move(incl), std::move(conj), top->generator());
}

FieldPtr make_quadratic(const FieldPtr& E, const FieldElement& d, std::string name) {
    return Field::quadratic(E, d, std::move(name));
}

FieldElement nonsquare_unit(const FieldPtr& E) {
    const ResidueField& k = E->residue_field();
    for (ResidueField::Elem r = 1; r < k.q(); ++r) {
        if (!k.is_square(r)) return E->lift(r);
    }
    throw MathError("residue field without non-squares");
}

FieldElement find_traceless(const QuadraticPair& pair) { return pair.generator; }

// ------------------------------------------------------------ BiquadLattice

const FieldMap& conjugation(const BiquadLattice& lat, Subfield fixed) {
    switch (fixed) {
        case Subfield::K: return lat.sigma;
        case Subfield::Kp: return lat.sigma_p;
        case Subfield::Kpp: return lat.sigma_pp;
    }
    throw MathError("subfield not in the lattice");
}

const QuadraticPair& pair_over(const BiquadLattice& lat, Subfield sub) {
    switch (sub) {
        case Subfield::K: return lat.L_K;
        case Subfield::Kp: return lat.L_Kp;
        case Subfield::Kpp: return lat.L_Kpp;
    }
    throw MathError("subfield not in the lattice");
}

BiquadLattice biquad_lattice(const FieldPtr& F, const FieldElement& d, const FieldElement& dp) {
    require_base_field(F);
    if (d.field() != F || dp.field() != F) throw MathError("biquad_lattice: constants must lie in F");
    if (d.is_zero() || F->is_square(d)) throw MathError("biquad_lattice: d must be a non-square of F");
    const FieldPtr K = make_quadratic(F, d, F->name() + "(sqrt(" + base_str(d) + "))");
    return biquad_lattice(K, dp);
}

BiquadLattice biquad_lattice(const FieldPtr& K, const FieldElement& dp) {
    const FieldPtr F = K->base_field();
    require_base_field(F);
    const FieldElement d = K->step_constant();
    if (dp.field() != F) throw MathError("biquad_lattice: d' must lie in F");
    if (dp.is_zero() || F->is_square(dp)) throw MathError("biquad_lattice: d' must be a non-square of F");
    if (F->is_square(d * dp)) throw MathError("biquad_lattice: d and d' lie in the same square class");
    BiquadLattice lat;
    lat.F = F;
    lat.K = K;
    lat.d = d;
    lat.dp = dp;
    const std::string dname = base_str(d), dpname = base_str(dp);
    lat.L = make_quadratic(K, K->from_base(dp), F->name() + "(sqrt(" + dname + "),sqrt(" + dpname + "))");
    lat.Kp = make_quadratic(F, dp, F->name() + "(sqrt(" + dpname + "))");
    lat.Kpp = make_quadratic(F, d * dp, F->name() + "(sqrt(" + base_str(d * dp) + "))");
    const FieldPtr& L = lat.L;
    const FieldElement s = L->from_base(K->generator());
    const FieldElement t = L->generator();
    lat.sigma = FieldMap(L, L, {s, -t});
    lat.sigma_p = FieldMap(L, L, {-s, t});
    lat.sigma_pp = FieldMap(L, L, {-s, -t});
    lat.K_F = tower_pair(K, "K/F");
    lat.Kp_F = tower_pair(lat.Kp, "K'/F");
    lat.Kpp_F = tower_pair(lat.Kpp, "K''/F");
    lat.L_K = make_pair("L/K", FieldMap::inclusion(K, L), lat.sigma, t);
    lat.L_Kp = make_pair("L/K'", FieldMap(lat.Kp, L, {t}), lat.sigma_p, s);
    lat.L_Kpp = make_pair("L/K''", FieldMap(lat.Kpp, L, {s * t}), lat.sigma_pp, s);
    return lat;
}

// -------------------------------------------------------------- classifier

std::vector<FieldMap> automorphisms(const FieldPtr& E) { return embeddings(E, E); }

GaloisType galois_type(const FieldPtr& L) {
    if (L->depth() != 2) throw MathError("galois_type expects a tower F ⊂ K ⊂ L");
    const std::vector<FieldMap> auts = automorphisms(L);
    if (auts.size() == 2) return GaloisType::NonGalois;
    if (auts.size() != 4) throw MathError("unexpected number of automorphisms: " + std::to_string(auts.size()));
    for (const auto& a : auts) {
        if (automorphism_order(a) == 4) return GaloisType::Cyclic;
    }
    return GaloisType::Biquadratic;
}

bool has_dihedral_signature(const std::vector<FieldMap>& group) {
    if (group.size() != 8) return false;
    int involutions = 0;
    bool abelian = true;
    for (const auto& a : group) {
        if (automorphism_order(a) == 2) ++involutions;
        for (const auto& b : group) {
            if (!(a.compose(b) == b.compose(a))) abelian = false;
        }
    }
    return !abelian && involutions >= 2;
}

// ------------------------------------------------------- non-Galois closure

NonGaloisLattice nongalois_closure(const FieldPtr& L) {
    if (galois_type(L) != GaloisType::NonGalois) throw MathError("nongalois_closure: L/F is Galois");
    const FieldPtr K = L->base_field();
    const FieldPtr F = K->base_field();
    if (F->q() % 4 != 3) throw MathError("nongalois_closure: requires q ≡ 3 mod 4");
    NonGaloisLattice ng;
    ng.F = F;
    ng.K = K;
    ng.L = L;
    ng.M = make_quadratic(L, L->from_int(-1), L->name() + "(sqrt(-1))");
    const FieldPtr& M = ng.M;
    ng.automorphisms = automorphisms(M);
    if (!has_dihedral_signature(ng.automorphisms)) throw MathError("nongalois_closure: closure group is not dihedral of order 8");

    const QuadraticPair K_F = tower_pair(K, "K/F");
    const FieldElement e = L->step_constant();
    const FieldElement theta_e = K_F.conjugation(e);
    const FieldElement s_M = M->from_base(K->generator());
    const auto root = M->sqrt(M->from_base(theta_e));
    if (!root) throw MathError("nongalois_closure: conjugate constant has no root in M");
    ng.theta_tilde = FieldMap(L, M, {-s_M, *root});
    ng.Lp = make_quadratic(K, theta_e, L->name() + "'");
    ng.Lp_to_M = FieldMap(ng.Lp, M, {s_M, *root});
    ng.L_to_M = FieldMap::inclusion(L, M);

    // B = K(√d′) with d′ ∈ {-1, -d}; K′ = F(√d′) must be the subfield over which M is cyclic.
    const FieldElement d = K->step_constant();
    bool found = false;
    for (const FieldElement& dp : {F->from_int(-1), -d}) {
        BiquadLattice B = biquad_lattice(K, dp);
        const auto dp_root = M->sqrt(M->from_base(dp));
        if (!dp_root) continue;
        FieldMap B_to_M(B.L, M, {s_M, *dp_root});
        const FieldElement kp_gen = B_to_M(B.L_Kp.inclusion(B.Kp->generator()));
        std::vector<FieldMap> fixing;
        for (const auto& a : ng.automorphisms) {
            if (a(kp_gen) == kp_gen) fixing.push_back(a);
        }
        const bool cyclic = fixing.size() == 4 && std::any_of(fixing.begin(), fixing.end(), [](const FieldMap& a) {
                                return automorphism_order(a) == 4;
                            });
        if (!cyclic) continue;
        ng.B = std::move(B);
        ng.B_to_M = std::move(B_to_M);
        found = true;
        break;
    }
    if (!found) throw MathError("nongalois_closure: no quadratic subfield K' with M/K' cyclic");

    ng.L_K = tower_pair(L, "L/K");
    ng.Lp_K = tower_pair(ng.Lp, "L'/K");
    ng.M_L = tower_pair(M, "M/L");
    const FieldElement t_M = M->from_base(L->generator());
    FieldMap tau(M, M, {s_M, -t_M, M->generator()});
    ng.M_B = make_pair("M/B", ng.B_to_M, std::move(tau), t_M);
    return ng;
}

// ------------------------------------------------------------------ Lattice

FieldMap Lattice::embedding(const FieldPtr& sub, const FieldPtr& sup) const {
    std::function<std::optional<FieldMap>(const FieldPtr&, int)> search = [&](const FieldPtr& from, int depth) -> std::optional<FieldMap> {
        if (from == sup) return FieldMap::identity(sup);
        for (FieldPtr f = sup; f; f = f->base_field()) {
            if (f == from) return FieldMap::inclusion(from, sup);
        }
        if (depth == 0) return std::nullopt;
        for (const auto& m : registered) {
            if (m.source() != from) continue;
            if (auto rest = search(m.target(), depth - 1)) return rest->compose(m);
        }
        return std::nullopt;
    };
    if (auto m = search(sub, 3)) return *m;
    throw MathError("no registered embedding " + sub->name() + " -> " + sup->name());
}

FieldElement embed(const Lattice& lat, const FieldPtr& sup, const FieldElement& x) {
    return lat.embedding(x.field(), sup).apply(x);
}

Lattice build_lattice(const FieldPtr& K, const FieldElement& e, const std::string& l_name) {
    const FieldPtr F = K->base_field();
    require_base_field(F);
    Lattice lat;
    lat.F = F;
    lat.K = K;
    const FieldPtr L = make_quadratic(K, e, l_name);
    lat.type = galois_type(L);
    switch (lat.type) {
        case GaloisType::Biquadratic: {
            std::optional<FieldElement> dp;
            if (lies_in_base(e)) {
                dp = e.lower();
            } else {
                const long long u = least_nonresidue(F->p());
                for (long long c : {u, static_cast<long long>(F->p()), u * F->p()}) {
                    if (K->is_square(e * K->from_int(c))) {
                        dp = F->from_int(c);
                        break;
                    }
                }
            }
            if (!dp) throw MathError("biquadratic L without a constant from F");
            BiquadLattice biq = biquad_lattice(K, *dp);
            lat.L = biq.L;
            lat.K_F = biq.K_F;
            lat.L_K = biq.L_K;
            lat.registered = {biq.L_Kp.inclusion, biq.L_Kpp.inclusion};
            lat.biquad = std::move(biq);
            break;
        }
        case GaloisType::Cyclic: {
            lat.L = L;
            lat.K_F = tower_pair(K, "K/F");
            lat.L_K = tower_pair(L, "L/K");
            for (const auto& a : automorphisms(L)) {
                if (automorphism_order(a) == 4) {
                    lat.theta_tilde = a;
                    break;
                }
            }
            break;
        }
        case GaloisType::NonGalois: {
            lat.L = L;
            lat.K_F = tower_pair(K, "K/F");
            lat.L_K = tower_pair(L, "L/K");
            NonGaloisLattice ng = nongalois_closure(L);
            lat.registered = {ng.L_to_M, ng.Lp_to_M, ng.B_to_M, ng.B.L_Kp.inclusion, ng.B.L_Kpp.inclusion};
            lat.nongalois = std::move(ng);
            break;
        }
    }
    return lat;
}

}  // namespace gl2dist
