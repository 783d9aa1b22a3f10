#include "gl2dist/characters.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "gl2dist/errors.hpp"

namespace gl2dist {

namespace {

std::int64_t qm1(const FieldPtr& E) { return static_cast<std::int64_t>(E->q()) - 1; }

void require_same(const MultChar& a, const MultChar& b) {
    if (a.field != b.field) throw MathError("characters of different fields");
}

bool char_less(const MultChar& a, const MultChar& b) { return std::tie(a.t, a.m) < std::tie(b.t, b.m); }

}  // namespace

std::int64_t MultChar::order() const {
    const std::int64_t n = qm1(field);
    const std::int64_t unit_order = n / std::gcd<std::int64_t>(m, n);
    return std::lcm(t.order(), unit_order);
}

MultChar MultChar::operator+(const MultChar& o) const {
    require_same(*this, o);
    return make_char(field, t + o.t, static_cast<long long>(m) + o.m);
}

MultChar MultChar::operator-() const { return make_char(field, -t, -static_cast<long long>(m)); }

MultChar MultChar::operator-(const MultChar& o) const { return *this + (-o); }

bool MultChar::operator==(const MultChar& o) const { return field == o.field && t == o.t && m == o.m; }

std::string MultChar::str() const { return "t=" + t.str() + ";m=" + std::to_string(m); }

MultChar trivial_char(const FieldPtr& E) { return {E, Cyclo(), 0}; }

MultChar make_char(const FieldPtr& E, Cyclo t, long long m) {
    const long long n = qm1(E);
    long long r = m % n;
    if (r < 0) r += n;
    return {E, t, static_cast<std::uint32_t>(r)};
}

Cyclo eval(const MultChar& chi, const TameCoords& x) {
    return chi.t.times(x.valuation) + Cyclo(static_cast<std::int64_t>(chi.m) * x.log, qm1(chi.field));
}

Cyclo eval(const MultChar& chi, const FieldElement& x) {
    if (x.field() != chi.field) throw MathError("character evaluated outside its field");
    return eval(chi, chi.field->tame_coords(x));
}

MultChar pullback(const MultChar& chi, const FieldPtr& src, const TameCoords& pi_image, const TameCoords& g_image) {
    const Cyclo t = eval(chi, pi_image);
    const Cyclo g = eval(chi, g_image);
    const std::int64_t n = qm1(src);
    // g_src has order n, so χ(φ(g_src)) is an n-th root of unity k/n.
    if ((g.num() * n) % g.den() != 0) throw MathError("pulled-back character is not tame");
    return make_char(src, t, g.num() * n / g.den());
}

MultChar restrict(const MultChar& chi, const FieldMap& incl) {
    if (incl.target() != chi.field) throw MathError("restriction along a map into another field");
    return pullback(chi, incl.source(), incl.image_of_uniformizer(), incl.image_of_teichmuller());
}

MultChar compose_with_norm(const MultChar& mu, const QuadraticPair& pair) {
    if (mu.field != pair.bottom) throw MathError("compose_with_norm: character not on " + pair.name + " bottom field");
    return pullback(mu, pair.top, pair.norm_of_uniformizer, pair.norm_of_teichmuller);
}

MultChar conjugate_char(const MultChar& chi, const FieldMap& sigma) {
    if (sigma.source() != chi.field || sigma.target() != chi.field) throw MathError("conjugate_char: not an automorphism of the character's field");
    return restrict(chi, sigma);
}

MultChar eta(const QuadraticPair& pair) {
    const FieldPtr& E = pair.bottom;
    const Cyclo half(1, 2);
    const bool pi_norm = E->hilbert_symbol(E->uniformizer(), pair.constant) == 1;
    const bool g_norm = E->hilbert_symbol(E->teichmuller_generator(), pair.constant) == 1;
    return make_char(E, pi_norm ? Cyclo() : half, g_norm ? 0 : qm1(E) / 2);
}

bool is_regular(const MultChar& omega, const QuadraticPair& pair) {
    return !(conjugate_char(omega, pair.conjugation) == omega);
}

std::vector<MultChar> descend(const MultChar& omega, const QuadraticPair& pair) {
    if (omega.field != pair.top) throw MathError("descend: character not on " + pair.name + " top field");
    if (is_regular(omega, pair)) throw MathError("descend: character is regular");
    const FieldPtr& B = pair.bottom;
    const Cyclo at_g = eval(omega, TameCoords{0, 1});
    const Cyclo at_pi = omega.t;
    const TameCoords& npi = pair.norm_of_uniformizer;
    const TameCoords& ng = pair.norm_of_teichmuller;
    const long long k = npi.valuation;  // inertia degree, 1 or 2
    std::vector<MultChar> out;
    for (long long m = 0; m < qm1(B); ++m) {
        const MultChar unit_part = make_char(B, Cyclo(), m);
        if (!(eval(unit_part, ng) == at_g)) continue;
        const Cyclo rest = at_pi - eval(unit_part, npi);
        // k·t = rest: the k solutions differ by multiples of 1/k.
        const Cyclo t0(rest.num(), rest.den() * k);
        for (long long j = 0; j < k; ++j) {
            MultChar mu = make_char(B, t0 + Cyclo(j, k), m);
            if (compose_with_norm(mu, pair) == omega) out.push_back(mu);
        }
    }
    std::sort(out.begin(), out.end(), char_less);
    if (out.size() != 2) throw MathError("descend: expected two characters, found " + std::to_string(out.size()));
    return out;
}

MultChar central_character(const MultChar& omega, const QuadraticPair& pair) {
    return restrict(omega, pair.inclusion) + eta(pair);
}

std::optional<int> order_in_norm_dual(const MultChar& chi_F, const QuadraticPair& L_K, const QuadraticPair& K_F) {
    if (chi_F.field != K_F.bottom || L_K.bottom != K_F.top) throw MathError("order_in_norm_dual: inconsistent tower");
    const FieldPtr& F = K_F.bottom;
    for (const FieldElement& x : {L_K.top->uniformizer(), L_K.top->teichmuller_generator()}) {
        if (!eval(chi_F, F->tame_coords(K_F.norm(L_K.norm(x)))).is_zero()) return std::nullopt;
    }
    return static_cast<int>(chi_F.order());
}

MultChar extend_character(const MultChar& eta_F, const QuadraticPair& K_F) {
    if (eta_F.field != K_F.bottom) throw MathError("extend_character: character not on the base field");
    const FieldPtr& K = K_F.top;
    const int max_den = static_cast<int>(4 * eta_F.order());
    std::optional<MultChar> best;
    for (const Cyclo& t : farey_values(max_den)) {
        for (long long m = 0; m < qm1(K); ++m) {
            MultChar cand = make_char(K, t, m);
            if (!(restrict(cand, K_F.inclusion) == eta_F)) continue;
            if (!best || cand.order() < best->order()) best = cand;  // (t, m) order breaks ties
        }
    }
    if (!best) throw MathError("extend_character: no tame extension found");
    return *best;
}

Subgroup image_subgroup(const FieldMap& incl) { return {incl.image_of_uniformizer(), incl.image_of_teichmuller()}; }

Subgroup norm_subgroup(const QuadraticPair& pair, const FieldMap& into) {
    if (into.source() != pair.bottom) throw MathError("norm_subgroup: embedding of the wrong field");
    const FieldPtr& E = into.target();
    return {E->tame_coords(into(pair.norm(pair.top->uniformizer()))),
            E->tame_coords(into(pair.norm(pair.top->teichmuller_generator())))};
}

bool trivial_on(const MultChar& chi, const Subgroup& h) {
    return std::all_of(h.begin(), h.end(), [&](const TameCoords& x) { return eval(chi, x).is_zero(); });
}

std::vector<MultChar> enumerate_chars(const FieldPtr& E, const EnumConstraints& c) {
    if (c.max_denominator < 1 || c.max_denominator > 64) throw MathError("max_denominator must lie in [1, 64]");
    if (c.regular_over && c.regular_over->top != E) throw MathError("regularity constraint for another field");
    std::vector<MultChar> out;
    for (const Cyclo& t : farey_values(c.max_denominator)) {
        for (long long m = 0; m < qm1(E); ++m) {
            MultChar chi = make_char(E, t, m);
            if (c.trivial_on && !trivial_on(chi, *c.trivial_on)) continue;
            if (c.regular_over && !is_regular(chi, *c.regular_over)) continue;
            out.push_back(chi);
        }
    }
    return out;
}

}  // namespace gl2dist
