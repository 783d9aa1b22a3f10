#include "gl2dist/spec_parser.hpp"

#include <cctype>
#include <limits>

#include "gl2dist/errors.hpp"

namespace gl2dist {

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i_); }

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool at_end() {
        skip_ws();
        return i_ >= s_.size();
    }

    bool accept(const std::string& tok) {
        skip_ws();
        if (s_.compare(i_, tok.size(), tok) == 0) {
            i_ += tok.size();
            return true;
        }
        return false;
    }

    void expect(const std::string& tok) {
        if (!accept(tok)) fail("expected '" + tok + "'");
    }

    bool peek_digit_or_sign() {
        skip_ws();
        if (i_ >= s_.size()) return false;
        const char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) return true;
        return (c == '-' || c == '+') && i_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_ + 1]));
    }

    long long integer() {
        skip_ws();
        const std::size_t start = i_;
        if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
        const std::size_t digits = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ == digits) {
            i_ = start;
            fail("expected an integer");
        }
        if (i_ - digits > 15) {
            i_ = start;
            fail("integer too large");
        }
        return std::stoll(s_.substr(start, i_ - start));
    }

    std::size_t pos() const { return i_; }

private:
    const std::string& s_;
    std::size_t i_ = 0;
};

FieldSymbol fclass(Parser& in) {
    if (in.accept("up")) return {FieldSymbol::Kind::UP, 0};
    if (in.accept("u")) return {FieldSymbol::Kind::U, 0};
    if (in.accept("p")) return {FieldSymbol::Kind::P, 0};
    if (in.peek_digit_or_sign()) {
        const long long v = in.integer();
        if (v == 0) in.fail("zero is not a square class");
        return {FieldSymbol::Kind::Int, v};
    }
    in.fail("expected a square class (u, p, up) or a nonzero integer");
}

KAtom linear(Parser& in) {
    KAtom atom{KAtom::Kind::Linear, {}, 0, 0};
    bool first = true;
    for (;;) {
        long long sign = 1;
        if (in.accept("+")) {
        } else if (in.accept("-")) {
            sign = -1;
        } else if (!first) {
            break;
        }
        first = false;
        if (in.accept("s")) {
            atom.b += sign;
        } else {
            const long long n = in.integer() * sign;
            if (in.accept("*")) {
                in.expect("s");
                atom.b += n;
            } else {
                atom.a += n;
            }
        }
    }
    if (atom.a == 0 && atom.b == 0) in.fail("the linear form is zero");
    return atom;
}

KAtom katom(Parser& in) {
    if (in.accept("uK")) return {KAtom::Kind::UnitK, {}, 0, 0};
    if (in.accept("piK")) return {KAtom::Kind::PiK, {}, 0, 0};
    if (in.accept("s")) return {KAtom::Kind::S, {}, 0, 0};
    if (in.accept("(")) {
        KAtom atom = linear(in);
        in.expect(")");
        return atom;
    }
    return {KAtom::Kind::Base, fclass(in), 0, 0};
}

}  // namespace

long long FieldSymbol::resolve(int p) const {
    const long long u = least_nonresidue(p);
    switch (kind) {
        case Kind::U: return u;
        case Kind::P: return p;
        case Kind::UP: return u * p;
        case Kind::Int: return value;
    }
    return 0;
}

std::string FieldSymbol::str() const {
    switch (kind) {
        case Kind::U: return "u";
        case Kind::P: return "p";
        case Kind::UP: return "up";
        case Kind::Int: return std::to_string(value);
    }
    return "?";
}

std::string KAtom::str() const {
    switch (kind) {
        case Kind::Base: return base.str();
        case Kind::UnitK: return "uK";
        case Kind::PiK: return "piK";
        case Kind::S: return "s";
        case Kind::Linear: return "(" + std::to_string(a) + (b < 0 ? "" : "+") + std::to_string(b) + "*s)";
    }
    return "?";
}

FieldElement KAtom::resolve(const FieldPtr& K) const {
    switch (kind) {
        case Kind::Base: return K->from_int(base.resolve(K->p()));
        case Kind::UnitK: return nonsquare_unit(K);
        case Kind::PiK: return K->uniformizer();
        case Kind::S: return K->generator();
        case Kind::Linear: return K->from_int(a) + K->from_int(b) * K->generator();
    }
    throw MathError("unknown atom");
}

FieldSpec parse_field_spec(const std::string& text) {
    Parser in(text);
    FieldSpec spec;
    spec.text = text;
    if (in.accept("F")) {
        in.expect("=");
        in.expect("Q");
        if (!in.accept("p")) {
            const long long p = in.integer();
            if (p < 3 || p > std::numeric_limits<int>::max()) in.fail("the prime must be an odd prime");
            spec.prime = static_cast<int>(p);
        }
        in.expect(";");
    }
    in.expect("K");
    in.expect("=");
    in.expect("sqrt");
    in.expect("(");
    spec.d = fclass(in);
    in.expect(")");
    if (in.accept(";") && !in.at_end()) {
        in.expect("L");
        in.expect("=");
        LStep l;
        if (in.accept("4rt")) {
            l.quartic = true;
            in.expect("(");
            l.fourth_root_of = fclass(in);
            in.expect(")");
        } else {
            in.expect("sqrt");
            in.expect("(");
            l.factors.push_back(katom(in));
            while (in.accept("*")) l.factors.push_back(katom(in));
            in.expect(")");
        }
        spec.l = std::move(l);
        in.accept(";");
    }
    if (!in.at_end()) in.fail("unexpected trailing input");
    return spec;
}

CharSpec parse_char_spec(const std::string& text) {
    Parser in(text);
    CharSpec c;
    bool have_t = false, have_m = false;
    for (int field = 0; field < 2; ++field) {
        if (field > 0) in.expect(";");
        if (!have_t && in.accept("t")) {
            in.expect("=");
            const long long num = in.integer();
            long long den = 1;
            if (in.accept("/")) {
                den = in.integer();
                if (den <= 0) in.fail("denominator must be positive");
            }
            c.t = Cyclo(num, den);
            have_t = true;
        } else if (!have_m && in.accept("m")) {
            in.expect("=");
            c.m = in.integer();
            have_m = true;
        } else {
            in.fail(have_t ? "expected 'm='" : have_m ? "expected 't='" : "expected 't=' or 'm='");
        }
    }
    in.accept(";");
    if (!in.at_end()) in.fail("unexpected trailing input");
    return c;
}

Tower build_tower(const FieldSpec& spec, int p, int precision) {
    if (spec.prime && *spec.prime != p) throw MathError("the spec names Q" + std::to_string(*spec.prime) + " but p = " + std::to_string(p));
    Tower t;
    t.F = Field::base(p, precision);
    const long long d = spec.d.resolve(p);
    t.K = make_quadratic(t.F, t.F->from_int(d), t.F->name() + "(sqrt(" + std::to_string(d) + "))");
    if (!spec.l) return t;
    FieldElement e = t.K->one();
    std::string l_name = t.K->name() + "(4rt(" + std::to_string(d) + "))";
    if (spec.l->quartic) {
        if (spec.l->fourth_root_of.resolve(p) != d) throw MathError("4rt(c) needs K = sqrt(c)");
        e = t.K->generator();
    } else {
        std::string factors;
        for (const KAtom& a : spec.l->factors) {
            e = e * a.resolve(t.K);
            factors += (factors.empty() ? "" : "*") + a.str();
        }
        l_name = t.K->name() + "(sqrt(" + factors + "))";
    }
    t.lattice = build_lattice(t.K, e, l_name);
    return t;
}

MultChar make_spec_char(const FieldPtr& E, const CharSpec& c) {
    const long long qm1 = static_cast<long long>(E->q()) - 1;
    if (c.m < 0 || c.m >= qm1) throw MathError("m must lie in [0, " + std::to_string(qm1) + ") for this field");
    return make_char(E, c.t, c.m);
}

}  // namespace gl2dist
