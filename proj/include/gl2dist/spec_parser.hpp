#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gl2dist/characters.hpp"
#include "gl2dist/cyclo.hpp"
#include "gl2dist/field.hpp"
#include "gl2dist/towers.hpp"

namespace gl2dist {

/// A square-class symbol or integer naming an element of F = Q_p.
struct FieldSymbol {
    enum class Kind { U, P, UP, Int } kind = Kind::Int;
    long long value = 0;  // for Int

    long long resolve(int p) const;
    std::string str() const;
};

/// A factor of the constant of L over K.
struct KAtom {
    enum class Kind { Base, UnitK, PiK, S, Linear } kind = Kind::Base;
    FieldSymbol base;      // Base
    long long a = 0, b = 0;  // Linear: a + b·s

    FieldElement resolve(const FieldPtr& K) const;
    std::string str() const;
};

struct LStep {
    bool quartic = false;        // L = 4rt(c) = K(√s) with K = F(√c)
    FieldSymbol fourth_root_of;  // quartic
    std::vector<KAtom> factors;  // sqrt(product)
};

struct FieldSpec {
    std::optional<int> prime;  // from "F=Q<p>"
    FieldSymbol d;
    std::optional<LStep> l;
    std::string text;
};

/// `[F=Q<p>;]K=sqrt(<fclass>)[;L=sqrt(<product>)|;L=4rt(<fclass>)]`; see docs/grammar.md.
FieldSpec parse_field_spec(const std::string& text);

struct CharSpec {
    Cyclo t;
    long long m = 0;
};

/// `t=<rational>;m=<int>` (either order).
CharSpec parse_char_spec(const std::string& text);

struct Tower {
    FieldPtr F, K;
    std::optional<Lattice> lattice;
};

/// Throws MathError for data that parse but do not define the fields (square constants, ...).
Tower build_tower(const FieldSpec& spec, int p, int precision = 24);

/// Throws MathError unless 0 ≤ m < q - 1.
MultChar make_spec_char(const FieldPtr& E, const CharSpec& c);

}  // namespace gl2dist
