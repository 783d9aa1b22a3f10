#pragma once

#include <vector>

#include "gl2dist/field.hpp"

namespace gl2dist {

/// A Q_p-linear ring embedding src → dst given by the images of the tower generators of src.
///
/// images[j] is the image of the generator adjoined at step j + 1 of src's tower. The images
/// are validated: images[j]² must equal the image of that step's constant.
class FieldMap {
public:
    FieldMap() = default;
    FieldMap(FieldPtr src, FieldPtr dst, std::vector<FieldElement> images);

    static FieldMap identity(const FieldPtr& f);
    /// Inclusion of a field of the tower of sup into sup.
    static FieldMap inclusion(const FieldPtr& sub, const FieldPtr& sup);

    const FieldPtr& source() const noexcept { return src_; }
    const FieldPtr& target() const noexcept { return dst_; }
    const std::vector<FieldElement>& images() const noexcept { return images_; }

    FieldElement apply(const FieldElement& x) const;
    FieldElement operator()(const FieldElement& x) const { return apply(x); }
    /// The unique x with apply(x) = y; throws MathError when y is not in the image.
    FieldElement preimage(const FieldElement& y) const;
    bool in_image(const FieldElement& y) const;

    /// this ∘ inner.
    FieldMap compose(const FieldMap& inner) const;
    bool is_identity() const;
    bool operator==(const FieldMap& o) const;

    /// Tame coordinates in dst of the images of src's uniformizer and Teichmüller generator.
    const TameCoords& image_of_uniformizer() const noexcept { return tc_pi_; }
    const TameCoords& image_of_teichmuller() const noexcept { return tc_g_; }

private:
    FieldPtr src_;
    FieldPtr dst_;
    std::vector<FieldElement> images_;
    std::vector<FieldElement> monomials_;  // images of the coordinate basis of src
    TameCoords tc_pi_;
    TameCoords tc_g_;
};

/// All embeddings src → dst (every field contains Q_p, so these are the Q_p-embeddings),
/// found step by step through square roots in dst. Deterministic order.
std::vector<FieldMap> embeddings(const FieldPtr& src, const FieldPtr& dst);

/// Order of an automorphism (source = target), up to max_order; 0 if larger.
int automorphism_order(const FieldMap& sigma, int max_order = 16);

}  // namespace gl2dist
