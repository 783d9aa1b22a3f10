#include "gl2dist/epsilon.hpp"

#include <cmath>
#include <numbers>

#include "gl2dist/errors.hpp"

namespace gl2dist {

namespace {

Cyclo to_cyclo(const std::pair<mpz_class, mpz_class>& frac) {
    if (!frac.second.fits_slong_p()) throw MathError("additive character value with a denominator beyond 64 bits");
    return Cyclo(frac.first.get_si(), frac.second.get_si());
}

EnumConstraints twists_of(const QuadraticPair& K_F, int max_denominator) {
    EnumConstraints c;
    c.max_denominator = max_denominator;
    c.trivial_on = image_subgroup(K_F.inclusion);
    return c;
}

}  // namespace

Cyclo AdditiveChar::operator()(const FieldElement& x) const {
    if (x.field() != field) throw MathError("additive character evaluated outside its field");
    if (x.is_zero()) return {};
    return to_cyclo(field->absolute_trace(a * x).fractional_part());
}

AdditiveChar standard_additive(const FieldPtr& E) { return {E, E->one(), E->ramification() - 1}; }

AdditiveChar twist_additive(const AdditiveChar& psi, const FieldElement& b) {
    if (b.field() != psi.field) throw MathError("twist_additive: element of another field");
    if (b.is_zero()) throw MathError("twist_additive: twisting by zero");
    return {psi.field, psi.a * b, psi.level + psi.field->valuation(b)};
}

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::FQ: return "FQ";
        case Provenance::GaussSum: return "GaussSum";
        case Provenance::Chain: return "Chain";
    }
    return "?";
}

std::complex<double> to_complex(const Cyclo& c) { return std::polar(1.0, 2 * std::numbers::pi * c.as_double()); }

EpsilonValue fq_epsilon(const MultChar& chi, const QuadraticPair& pair, const FieldElement& delta) {
    if (chi.field != pair.top) throw MathError("fq_epsilon: character not on " + pair.name + " top field");
    if (!restrict(chi, pair.inclusion).is_trivial()) {
        throw RegimeRefusal("fq_epsilon: character is not trivial on the lower field of " + pair.name);
    }
    if (delta.is_zero() || !(pair.conjugation(delta) == -delta)) throw MathError("fq_epsilon: delta is not traceless");
    return {eval(chi, delta), std::nullopt, Provenance::FQ};
}

EpsilonValue fq_epsilon(const MultChar& chi, const QuadraticPair& pair) { return fq_epsilon(chi, pair, find_traceless(pair)); }

EpsilonValue gauss_epsilon(const MultChar& chi, const AdditiveChar& psi) {
    if (chi.field != psi.field) throw MathError("gauss_epsilon: characters of different fields");
    const FieldPtr& E = chi.field;
    const long long n = psi.level;
    if (chi.conductor_exponent() == 0) {
        const Cyclo v = chi.t.times(n);
        return {std::nullopt, to_complex(v), Provenance::GaussSum};
    }
    // ε = χ(c)·q^{-1/2}·Σ_{r ∈ k*} χ^{-1}(r)·ψ(r/c), c = π^{1+n}; any lift of r will do.
    const FieldElement c_inv = E->uniformizer().pow(-(1 + n));
    const ResidueField& k = E->residue_field();
    const std::int64_t qm1 = static_cast<std::int64_t>(k.q()) - 1;
    std::complex<double> sum = 0;
    for (ResidueField::Elem r = 1; r < k.q(); ++r) {
        const Cyclo chi_inv(-static_cast<std::int64_t>(chi.m) * static_cast<std::int64_t>(k.log(r)), qm1);
        sum += to_complex(chi_inv + psi(E->lift(r) * c_inv));
    }
    const std::complex<double> value = to_complex(chi.t.times(1 + n)) * sum / std::sqrt(static_cast<double>(k.q()));
    return {std::nullopt, value, Provenance::GaussSum};
}

EpsilonValue lambda_factor(const QuadraticPair& L_K, const QuadraticPair& K_F) {
    if (L_K.bottom != K_F.top) throw MathError("lambda_factor: inconsistent tower");
    const MultChar e = eta(L_K);
    if (!restrict(e, K_F.inclusion).is_trivial()) {
        throw RegimeRefusal("lambda_factor: eta_{L/K} is not trivial on F*, the exact path is unavailable");
    }
    return {eval(e, find_traceless(K_F)), std::nullopt, Provenance::FQ};
}

HakimReport hakim_check(const BiquadLattice& lat, const MultChar& omega, int max_denominator, bool with_oracle) {
    if (omega.field != lat.L) throw MathError("hakim_check: omega must be a character of L");
    HakimReport report;
    if (restrict(omega, lat.L_Kp.inclusion).is_trivial()) {
        report.subfield = Subfield::Kp;
    } else if (restrict(omega, lat.L_Kpp.inclusion).is_trivial()) {
        report.subfield = Subfield::Kpp;
    } else {
        throw RegimeRefusal("hakim_check: omega is trivial on neither K'* nor K''*, the chain is not FQ-exact");
    }
    const QuadraticPair& over = pair_over(lat, report.subfield);
    const MultChar eta_lk = eta(lat.L_K);
    const FieldElement a = find_traceless(lat.K_F);
    const FieldElement a_L = lat.L_K.inclusion(a);
    report.lambda = *lambda_factor(lat.L_K, lat.K_F).exact;
    const Cyclo eta_a = eval(eta_lk, a);

    std::optional<std::complex<double>> lambda_num;
    AdditiveChar psi_L = standard_additive(lat.L);
    if (with_oracle) lambda_num = *gauss_epsilon(eta_lk, standard_additive(lat.K)).approx;

    report.holds = true;
    for (const MultChar& chi : enumerate_chars(lat.K, twists_of(lat.K_F, max_denominator))) {
        const MultChar mu = omega + compose_with_norm(chi, lat.L_K);
        if (!restrict(mu, over.inclusion).is_trivial()) throw MathError("hakim_check: twist left the FQ regime");
        // ε(π(μ), (ψ_K)_a) = λ·ε(μ, ψ_L)·μ(a)·η_{L/K}(a)
        TwistRow row{chi, mu, report.lambda + *fq_epsilon(mu, over, a_L).exact + eval(mu, a_L) + eta_a, std::nullopt};
        if (with_oracle) {
            row.approx = *lambda_num * *gauss_epsilon(mu, psi_L).approx * to_complex(eval(mu, a_L) + eta_a);
        }
        report.holds = report.holds && row.is_one();
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::vector<std::complex<double>> hakim_chain_numeric(const BiquadLattice& lat, const MultChar& omega, int max_denominator) {
    if (omega.field != lat.L) throw MathError("hakim_chain_numeric: omega must be a character of L");
    const MultChar eta_lk = eta(lat.L_K);
    const FieldElement a_L = lat.L_K.inclusion(find_traceless(lat.K_F));
    const Cyclo eta_a = eval(eta_lk, find_traceless(lat.K_F));
    const std::complex<double> lambda = *gauss_epsilon(eta_lk, standard_additive(lat.K)).approx;
    const AdditiveChar psi_L = standard_additive(lat.L);
    std::vector<std::complex<double>> out;
    for (const MultChar& chi : enumerate_chars(lat.K, twists_of(lat.K_F, max_denominator))) {
        const MultChar mu = omega + compose_with_norm(chi, lat.L_K);
        out.push_back(lambda * *gauss_epsilon(mu, psi_L).approx * to_complex(eval(mu, a_L) + eta_a));
    }
    return out;
}

}  // namespace gl2dist
