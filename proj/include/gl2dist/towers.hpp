#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gl2dist/field.hpp"
#include "gl2dist/field_map.hpp"

namespace gl2dist {

enum class GaloisType { Biquadratic, Cyclic, NonGalois };

std::string to_string(GaloisType t);

/// A quadratic extension top/bottom inside some lattice, with everything needed to compute
/// norms, traces and the quadratic character of bottom.
struct QuadraticPair {
    std::string name;
    FieldPtr top;
    FieldPtr bottom;
    FieldMap inclusion;      // bottom → top
    FieldMap conjugation;    // the nontrivial automorphism of top over bottom
    FieldElement generator;  // traceless; generator² = inclusion(constant)
    FieldElement constant;   // in bottom
    TameCoords norm_of_uniformizer;  // of π_top, in bottom
    TameCoords norm_of_teichmuller;  // of the Teichmüller generator of top, in bottom

    FieldElement norm(const FieldElement& x) const;
    FieldElement trace(const FieldElement& x) const;
    /// Residue-degree of top over bottom (1 ramified, 2 unramified).
    int inertia_degree() const { return top->residue_degree() / bottom->residue_degree(); }
};

/// Validates the data (conjugation fixes the image of bottom, negates the generator).
QuadraticPair make_pair(std::string name, FieldMap inclusion, FieldMap conjugation, FieldElement generator);
/// The last step of a tower: top = base(√c).
QuadraticPair tower_pair(const FieldPtr& top, std::string name);

/// E(√d); throws MathError when d is zero or a square.
FieldPtr make_quadratic(const FieldPtr& E, const FieldElement& d, std::string name);

/// The fixed non-square unit u_E of E: lift of the non-square residue of least index.
FieldElement nonsquare_unit(const FieldPtr& E);

/// The canonical traceless element of a pair (its generator).
FieldElement find_traceless(const QuadraticPair& pair);

/// Fig. 1: L = F(s, t) with s² = d, t² = d′; K = F(s), K′ = F(√d′) ↦ t, K″ = F(√(dd′)) ↦ st.
struct BiquadLattice {
    FieldPtr F, K, Kp, Kpp, L;
    FieldElement d, dp;  // in F
    QuadraticPair K_F, Kp_F, Kpp_F;
    QuadraticPair L_K, L_Kp, L_Kpp;
    FieldMap sigma, sigma_p, sigma_pp;  // conjugations of L over K, K′, K″
};

enum class Subfield { K, Kp, Kpp };
std::string to_string(Subfield s);

/// The conjugation of L fixing the given subfield.
const FieldMap& conjugation(const BiquadLattice& lat, Subfield fixed);
/// The pair L over the given subfield.
const QuadraticPair& pair_over(const BiquadLattice& lat, Subfield sub);

/// Throws MathError unless d, d′ and dd′ are all non-squares in F.
BiquadLattice biquad_lattice(const FieldPtr& F, const FieldElement& d, const FieldElement& dp);
/// Same, re-using an existing K = F(√d) (K's tower base must be F).
BiquadLattice biquad_lattice(const FieldPtr& K, const FieldElement& dp);

/// Fig. 2: the closure M = L(√-1) of a non-Galois L = K(√e).
struct NonGaloisLattice {
    FieldPtr F, K, L, Lp, M;
    BiquadLattice B;  // B.L is the field B = K(√d′) with B.K == K; B.Kp is the K′ with M/K′ cyclic
    FieldMap L_to_M, Lp_to_M, B_to_M;
    FieldMap theta_tilde;  // L → M extending θ, with image L′
    QuadraticPair L_K, Lp_K, M_L, M_B;
    std::vector<FieldMap> automorphisms;  // Aut(M/Q_p)
};

GaloisType galois_type(const FieldPtr& L);
/// All automorphisms of E (over Q_p).
std::vector<FieldMap> automorphisms(const FieldPtr& E);

/// Requires galois_type(L) == NonGalois and q ≡ 3 mod 4 for the residue field of F.
NonGaloisLattice nongalois_closure(const FieldPtr& L);

/// Dihedral-order-8 signature of a group of automorphisms: order 8, non-abelian, ≥ 2 involutions.
bool has_dihedral_signature(const std::vector<FieldMap>& group);

/// A tower F ⊂ K ⊂ L together with the lattice matching its Galois type.
///
/// For the biquadratic type the lattice is re-presented as F(√d, √d′) with d′ ∈ F
/// (using the given constant when it already lies in F), so L below is biq->L.
struct Lattice {
    GaloisType type = GaloisType::Biquadratic;
    FieldPtr F, K, L;
    QuadraticPair K_F, L_K;
    std::optional<BiquadLattice> biquad;
    std::optional<NonGaloisLattice> nongalois;
    std::optional<FieldMap> theta_tilde;  // cyclic: an automorphism of order 4
    std::vector<FieldMap> registered;     // embeddings available to embed()

    /// Registered (or tower) embedding sub → sup; throws MathError for unregistered pairs.
    FieldMap embedding(const FieldPtr& sub, const FieldPtr& sup) const;
};

/// Builds the lattice of L = K(√e), K = F(√d).
Lattice build_lattice(const FieldPtr& K, const FieldElement& e, const std::string& l_name = "L");

/// embed(sub, sup, x) through a lattice's registered embeddings.
FieldElement embed(const Lattice& lat, const FieldPtr& sup, const FieldElement& x);

}  // namespace gl2dist
