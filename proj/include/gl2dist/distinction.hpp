#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gl2dist/characters.hpp"
#include "gl2dist/towers.hpp"

namespace gl2dist {

enum class VerdictKind { Distinguished, EtaDistinguished, NotDistinguished };

/// "distinguished", "eta-distinguished", "not-distinguished".
std::string to_string(VerdictKind v);

struct Verdict {
    bool regular = false;
    bool plus_distinguished = false;
    VerdictKind verdict = VerdictKind::NotDistinguished;
    std::string witness;
};

/// The parameter (L, ω) of π(ω), attached to a lattice; ω lives on lattice.L.
struct DihedralDatum {
    const Lattice* lattice = nullptr;
    MultChar omega;
    bool regular = false;
};

DihedralDatum make_datum(const Lattice& lat, const MultChar& omega);

struct Decision {
    bool value = false;
    std::string witness;
};

/// GL2(F)+-distinction of a supercuspidal π(ω); throws MathError for non-regular ω.
Decision plus_distinguished(const DihedralDatum& d);
/// π^θ ≅ π^∨ with central character trivial on F*, read on the parameter side.
bool flicker_condition(const DihedralDatum& d);
Verdict decide_dihedral(const DihedralDatum& d);

/// A principal series π(λ, μ) of GL2(K).
struct PSParams {
    MultChar lambda;
    MultChar mu;
};

/// Always true: the modulus character |.|^{±1} is not a tame Q/Z-valued character, so the
/// excluded reducible case cannot be expressed in this value model.
bool assumed_irreducible(const PSParams& ps);

Decision ps_distinguished(const PSParams& ps, const QuadraticPair& K_F);
/// Triviality of (λ, μ) on {(x, θx)} or on F* × F*, tested on elements.
bool algebra_criterion(const PSParams& ps, const QuadraticPair& K_F);

/// Result of lifting ω to M and descending to B.
struct Reduction {
    bool regular_over_B = false;
    std::vector<MultChar> mu_prime;  // both descents to B when !regular_over_B
};

Reduction base_change_reduce(const DihedralDatum& d);
/// The alternative descent formula (μ|F*) ∘ N_{B/F} for ω = μ ∘ N_{L/K}; exposed for comparison.
MultChar base_change_variant(const NonGaloisLattice& ng, const MultChar& mu);

/// Decision for ω on a biquadratic lattice (used directly and after the non-Galois reduction).
Verdict decide_biquadratic(const BiquadLattice& lat, const MultChar& omega);
Decision plus_biquadratic(const BiquadLattice& lat, const MultChar& omega);
bool flicker_biquadratic(const BiquadLattice& lat, const MultChar& omega);

struct VerdictRow {
    MultChar omega;
    Verdict verdict;
};

struct VerdictTable {
    std::vector<VerdictRow> rows;
    int distinguished = 0;
    int eta_distinguished = 0;
    int not_distinguished = 0;
};

/// One row per class ω ~ ω^σ (the representative with the smaller (t, m)).
VerdictTable enumerate_verdicts(const Lattice& lat, int max_denominator, bool regular_only = false);

}  // namespace gl2dist
