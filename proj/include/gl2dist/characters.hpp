#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gl2dist/cyclo.hpp"
#include "gl2dist/field.hpp"
#include "gl2dist/field_map.hpp"
#include "gl2dist/towers.hpp"

namespace gl2dist {

/// Tame character of E*: t is its value at the fixed uniformizer, m the exponent on the
/// Teichmüller generator, so χ(π^v · g^l · (1 + P)) = v·t + m·l/(q-1) in Q/Z.
struct MultChar {
    FieldPtr field;
    Cyclo t;
    std::uint32_t m = 0;

    int conductor_exponent() const noexcept { return m == 0 ? 0 : 1; }
    bool is_trivial() const noexcept { return t.is_zero() && m == 0; }
    std::int64_t order() const;

    MultChar operator+(const MultChar& o) const;
    MultChar operator-(const MultChar& o) const;
    MultChar operator-() const;
    bool operator==(const MultChar& o) const;

    /// "t=1/4;m=3".
    std::string str() const;
};

MultChar trivial_char(const FieldPtr& E);
/// m is reduced mod q - 1.
MultChar make_char(const FieldPtr& E, Cyclo t, long long m);

Cyclo eval(const MultChar& chi, const FieldElement& x);
Cyclo eval(const MultChar& chi, const TameCoords& x);

/// x ↦ χ(φ(x)) for a multiplicative map φ: src* → field(χ)* described by the tame coordinates
/// of φ(π_src) and φ(g_src).
MultChar pullback(const MultChar& chi, const FieldPtr& src, const TameCoords& pi_image, const TameCoords& g_image);

/// χ ∘ incl on the source of incl.
MultChar restrict(const MultChar& chi, const FieldMap& incl);
/// μ ∘ N_{top/bottom}.
MultChar compose_with_norm(const MultChar& mu, const QuadraticPair& pair);
/// x ↦ χ(σ(x)).
MultChar conjugate_char(const MultChar& chi, const FieldMap& sigma);
/// The quadratic character of pair.bottom whose kernel is N(pair.top*).
MultChar eta(const QuadraticPair& pair);
bool is_regular(const MultChar& omega, const QuadraticPair& pair);
/// The two characters μ of pair.bottom with μ ∘ N = ω (they differ by η); throws for regular ω.
std::vector<MultChar> descend(const MultChar& omega, const QuadraticPair& pair);
/// ω|K* · η_{L/K}, written additively.
MultChar central_character(const MultChar& omega, const QuadraticPair& pair);

/// Order of χ_F as a character of F*/N_{L/F}(L*), or nullopt if χ_F is not trivial on the norms.
std::optional<int> order_in_norm_dual(const MultChar& chi_F, const QuadraticPair& L_K, const QuadraticPair& K_F);

/// A tame χ′ on K* with χ′|F* = η: the one of least order, then least t, then least m.
MultChar extend_character(const MultChar& eta_F, const QuadraticPair& K_F);

/// Tame coordinates (in E) of generators of a subgroup of E* modulo principal units.
using Subgroup = std::vector<TameCoords>;

/// The image of the source field's units and uniformizer under an embedding.
Subgroup image_subgroup(const FieldMap& incl);
/// N_{pair}(top*), pushed into E through `into` (an embedding bottom → E).
Subgroup norm_subgroup(const QuadraticPair& pair, const FieldMap& into);
bool trivial_on(const MultChar& chi, const Subgroup& h);

struct EnumConstraints {
    int max_denominator = 8;
    std::optional<Subgroup> trivial_on;
    const QuadraticPair* regular_over = nullptr;
};

/// Tame characters with t of denominator ≤ max_denominator (≤ 64) and any m, ordered by (t, m).
std::vector<MultChar> enumerate_chars(const FieldPtr& E, const EnumConstraints& c = {});

}  // namespace gl2dist
