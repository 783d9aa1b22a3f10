#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gl2dist/padic.hpp"
#include "gl2dist/residue_field.hpp"

namespace gl2dist {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Element of a tower field, as coordinates over Q_p.
///
/// For E = B(t) with t² = c ∈ B the coordinate vector is the concatenation [a | b] of the
/// coordinates of x = a + b·t. A degree-4 field F(s)(t) therefore uses the basis
/// {1, s, t, s·t}. Every vector is normalised to a common absolute precision: the least
/// absolute precision among its nonzero coordinates; coordinates below it are zero.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr field, std::vector<PAdic> coords);

    const FieldPtr& field() const noexcept { return field_; }
    const Field& owner() const noexcept { return *field_; }
    const std::vector<PAdic>& coords() const noexcept { return coords_; }
    std::size_t degree() const noexcept { return coords_.size(); }
    bool is_zero() const noexcept;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement inverse() const;
    FieldElement pow(long long e) const;
    FieldElement pow(const mpz_class& e) const;
    FieldElement scaled(const PAdic& c) const;

    /// Equal at the common working precision of the two operands.
    bool operator==(const FieldElement& o) const;

    /// For E = B(t): the parts a and b of a + b·t, as elements of B.
    FieldElement lower() const;
    FieldElement upper() const;

    std::string str() const;

private:
    void normalize();
    FieldPtr field_;
    std::vector<PAdic> coords_;
};

enum class StepKind { Base, Unramified, Ramified };

/// (valuation, discrete log of the Teichmüller part) of a nonzero element:
/// x = π^v · τ(g^log) · (1 + P).
struct TameCoords {
    long long valuation = 0;
    std::uint32_t log = 0;
    bool operator==(const TameCoords&) const = default;
};

/// A node of a tower Q_p = E0 ⊂ E1 ⊂ ... where each step adjoins √c, c ∈ previous field.
///
/// Uniformizer conventions: p on Q_p; unchanged across an unramified step; t/π_B^((k-1)/2)
/// across a ramified step where k = v_B(c) is odd.
class Field : public std::enable_shared_from_this<Field> {
public:
    static FieldPtr base(int p, int precision = kDefaultPrecision);
    /// base(√c). Throws MathError when c is zero or a square in base.
    static FieldPtr quadratic(const FieldPtr& base, const FieldElement& c, std::string name);

    int p() const noexcept { return p_; }
    int precision() const noexcept { return precision_; }
    int depth() const noexcept { return depth_; }
    int degree() const noexcept { return 1 << depth_; }
    /// Absolute ramification index and residue degree over Q_p.
    int ramification() const noexcept { return e_; }
    int residue_degree() const noexcept { return f_; }
    std::uint32_t q() const noexcept { return residue_->q(); }
    StepKind kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }
    const FieldPtr& base_field() const noexcept { return base_; }
    const ResidueField& residue_field() const noexcept { return *residue_; }
    std::shared_ptr<const ResidueField> residue_field_ptr() const noexcept { return residue_; }
    /// The chain of fields from Q_p up to this one.
    std::vector<FieldPtr> tower() const;

    /// The constant c of the last step, as an element of the base.
    const FieldElement& step_constant() const;
    /// The adjoined root t (t² = c).
    FieldElement generator() const;
    FieldElement uniformizer() const;
    /// Teichmüller lift of the residue-field generator: the fixed unit generator of μ_{q-1}.
    FieldElement teichmuller_generator() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(long long n) const;
    FieldElement scalar(const PAdic& x) const;
    /// From integer coordinates over Q_p.
    FieldElement element(const std::vector<long long>& coords) const;
    /// Image of an element of base_field() (or of any field further down the tower).
    FieldElement from_base(const FieldElement& x) const;

    /// Normalised valuation v_E (v_E(π_E) = 1). Throws on zero.
    long long valuation(const FieldElement& x) const;
    /// Residue of an element of valuation ≥ 0.
    ResidueField::Elem reduce(const FieldElement& x) const;
    /// A lift of a residue to the ring of integers.
    FieldElement lift(ResidueField::Elem r) const;
    FieldElement teichmuller(ResidueField::Elem r) const;
    TameCoords tame_coords(const FieldElement& x) const;
    bool is_square(const FieldElement& x) const;
    /// A square root with canonical sign (smaller residue index of the unit part).
    std::optional<FieldElement> sqrt(const FieldElement& x) const;
    /// Trace to Q_p.
    PAdic absolute_trace(const FieldElement& x) const;
    /// Tame Hilbert symbol (a, b) over this field.
    int hilbert_symbol(const FieldElement& a, const FieldElement& b) const;

    std::string describe() const;

private:
    Field() = default;
    FieldPtr self() const { return shared_from_this(); }
    void finish();

    int p_ = 0;
    int precision_ = 0;
    int depth_ = 0;
    int e_ = 1;
    int f_ = 1;
    StepKind kind_ = StepKind::Base;
    long long step_valuation_ = 0;
    std::string name_;
    FieldPtr base_;
    std::shared_ptr<const ResidueField> residue_;
    std::vector<FieldElement> held_;  // base-field elements: step constant, π_B^h, π_B^-h
    std::vector<PAdic> uniformizer_;
    std::vector<PAdic> uniformizer_inv_;
    std::vector<PAdic> teich_gen_;

    friend class FieldElement;
};

/// Check that both elements live in the same field.
void require_same_field(const FieldElement& a, const FieldElement& b);

}  // namespace gl2dist
