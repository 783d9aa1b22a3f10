#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "gl2dist/characters.hpp"
#include "gl2dist/cyclo.hpp"
#include "gl2dist/field.hpp"
#include "gl2dist/towers.hpp"

namespace gl2dist {

/// x ↦ ψ_{Q_p}(Tr_{E/Q_p}(a·x)) with ψ_{Q_p}(y) = exp(2πi·frac(y)).
///
/// level is the largest n with ψ trivial on P^{-n}; for the standard character (a = 1) it is
/// the different exponent e - 1.
struct AdditiveChar {
    FieldPtr field;
    FieldElement a;
    long long level = 0;

    Cyclo operator()(const FieldElement& x) const;
};

AdditiveChar standard_additive(const FieldPtr& E);
/// ψ_b(x) = ψ(b·x); level shifts by v(b).
AdditiveChar twist_additive(const AdditiveChar& psi, const FieldElement& b);

enum class Provenance { FQ, GaussSum, Chain };
std::string to_string(Provenance p);

struct EpsilonValue {
    std::optional<Cyclo> exact;
    std::optional<std::complex<double>> approx;
    Provenance provenance = Provenance::FQ;
};

/// exp(2πi·c).
std::complex<double> to_complex(const Cyclo& c);

/// ε(χ, ψ_top) = χ(Δ) for χ trivial on the bottom field; throws RegimeRefusal otherwise.
EpsilonValue fq_epsilon(const MultChar& chi, const QuadraticPair& pair);
/// The same value with an explicit traceless Δ (any element with σΔ = -Δ).
EpsilonValue fq_epsilon(const MultChar& chi, const QuadraticPair& pair, const FieldElement& delta);

/// Unit-normalized tame ε(χ, ψ) from the Gauss sum at level a(χ) + n(ψ).
EpsilonValue gauss_epsilon(const MultChar& chi, const AdditiveChar& psi);

/// λ(L/K, ψ_K) = η_{L/K}(a), a traceless in K/F; throws RegimeRefusal when η_{L/K}|F* ≠ 1.
EpsilonValue lambda_factor(const QuadraticPair& L_K, const QuadraticPair& K_F);

struct TwistRow {
    MultChar chi;  // on K, trivial on F*
    MultChar mu;   // ω + χ∘N_{L/K}
    Cyclo epsilon;
    std::optional<std::complex<double>> approx;
    bool is_one() const { return epsilon.is_zero(); }
};

struct HakimReport {
    bool holds = false;
    Subfield subfield = Subfield::Kp;  // the K′ or K″ on which ω is trivial
    Cyclo lambda;
    std::vector<TwistRow> rows;
};

/// Hakim's test through the exact chain ε = λ + ε(μ, ψ_L) + μ(a) + η_{L/K}(a) over all tame twists χ
/// (t-denominator ≤ max_denominator). Requires ω|K′* or ω|K″* trivial (RegimeRefusal otherwise).
/// With `with_oracle`, each row also carries the same chain evaluated from Gauss sums.
HakimReport hakim_check(const BiquadLattice& lat, const MultChar& omega, int max_denominator, bool with_oracle = false);

/// The chain ε(η_{L/K}, ψ_K)·ε(μ, ψ_L)·μ(a)·η_{L/K}(a) from Gauss sums alone, for any ω.
std::vector<std::complex<double>> hakim_chain_numeric(const BiquadLattice& lat, const MultChar& omega, int max_denominator);

}  // namespace gl2dist
