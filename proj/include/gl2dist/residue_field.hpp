#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace gl2dist {

/// Finite field F_q built as a tower of quadratic steps F_p ⊂ F_p(√w1) ⊂ ... .
///
/// Elements are packed indices in [0, q): an element a + b·√w of a step over a field of
/// size q' has index a + q'·b. Multiplication goes through exp/log tables built at
/// construction; q is at most a few thousand here.
class ResidueField {
public:
    using Elem = std::uint32_t;

    static std::shared_ptr<const ResidueField> prime_field(int p);
    /// base(√w); w must be a non-square of base.
    static std::shared_ptr<const ResidueField> quadratic(std::shared_ptr<const ResidueField> base, Elem w);

    int p() const noexcept { return p_; }
    std::uint32_t q() const noexcept { return q_; }
    int degree() const noexcept { return static_cast<int>(steps_.size()) + 1; }
    const std::shared_ptr<const ResidueField>& base() const noexcept { return base_; }
    /// Size of the immediate base field (q itself for the prime field).
    std::uint32_t base_size() const noexcept { return base_ ? base_->q() : q_; }

    Elem one() const noexcept { return 1; }
    Elem add(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem pow(Elem a, std::uint64_t e) const;
    Elem inv(Elem a) const;

    /// The canonical generator of F_q^*: least index of multiplicative order q - 1.
    Elem generator() const noexcept { return gen_; }
    /// Discrete log to the canonical generator, in [0, q-1). a must be nonzero.
    std::uint32_t log(Elem a) const;
    Elem exp(std::uint64_t k) const;
    bool is_square(Elem a) const;
    /// The square root with the smaller index, or nothing for non-squares.
    bool sqrt(Elem a, Elem& root) const;

private:
    ResidueField() = default;
    Elem mul_slow(Elem a, Elem b) const;
    void build_tables();

    int p_ = 0;
    std::uint32_t q_ = 0;
    std::shared_ptr<const ResidueField> base_;
    Elem w_ = 0;
    std::vector<Elem> steps_;
    Elem gen_ = 0;
    std::vector<std::uint32_t> log_;
    std::vector<Elem> exp_;
};

}  // namespace gl2dist
