#include "gl2dist/field_map.hpp"

#include <algorithm>
#include <climits>

#include "gl2dist/errors.hpp"

namespace gl2dist {

FieldMap::FieldMap(FieldPtr src, FieldPtr dst, std::vector<FieldElement> images)
    : src_(std::move(src)), dst_(std::move(dst)), images_(std::move(images)) {
    if (!src_ || !dst_) throw MathError("field map without fields");
    if (src_->p() != dst_->p()) throw MathError("field map between different primes");
    if (images_.size() != static_cast<std::size_t>(src_->depth())) throw MathError("one image per tower step expected");
    for (const auto& im : images_) {
        if (im.field() != dst_) throw MathError("generator image outside the target field");
    }
    const std::vector<FieldPtr> tower = src_->tower();
    monomials_ = {dst_->one()};
    for (std::size_t j = 0; j < images_.size(); ++j) {
        // The step constant lies in tower[j]; its image only involves the monomials built so far.
        const FieldElement c = tower[j + 1]->step_constant();
        FieldElement c_img = dst_->zero();
        for (std::size_t i = 0; i < c.coords().size(); ++i) {
            if (!c.coords()[i].is_zero()) c_img = c_img + monomials_[i].scaled(c.coords()[i]);
        }
        if (!(images_[j] * images_[j] == c_img)) throw MathError("generator image does not square to the step constant");
        const std::size_t n = monomials_.size();
        for (std::size_t i = 0; i < n; ++i) monomials_.push_back(monomials_[i] * images_[j]);
    }
    tc_pi_ = dst_->tame_coords(apply(src_->uniformizer()));
    tc_g_ = dst_->tame_coords(apply(src_->teichmuller_generator()));
}

FieldMap FieldMap::identity(const FieldPtr& f) { return inclusion(f, f); }

FieldMap FieldMap::inclusion(const FieldPtr& sub, const FieldPtr& sup) {
    std::vector<FieldElement> images;
    const std::vector<FieldPtr> tower = sub->tower();
    for (std::size_t j = 1; j < tower.size(); ++j) images.push_back(sup->from_base(tower[j]->generator()));
    return {sub, sup, std::move(images)};
}

FieldElement FieldMap::apply(const FieldElement& x) const {
    if (x.field() != src_) throw MathError("field map applied to an element of another field");
    FieldElement out = dst_->zero();
    for (std::size_t i = 0; i < x.coords().size(); ++i) {
        if (!x.coords()[i].is_zero()) out = out + monomials_[i].scaled(x.coords()[i]);
    }
    return out;
}

FieldElement FieldMap::preimage(const FieldElement& y) const {
    if (y.field() != dst_) throw MathError("preimage of an element of another field");
    const std::size_t rows = static_cast<std::size_t>(dst_->degree());
    const std::size_t cols = static_cast<std::size_t>(src_->degree());
    // Augmented system: column i holds the coordinates of monomial i.
    std::vector<std::vector<PAdic>> a(rows, std::vector<PAdic>(cols + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = monomials_[c].coords()[r];
        a[r][cols] = y.coords()[r];
    }
    std::vector<std::size_t> pivot_row(cols);
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t best = rows;
        int best_v = INT_MAX;
        for (std::size_t r = next; r < rows; ++r) {
            if (!a[r][c].is_zero() && a[r][c].valuation() < best_v) {
                best_v = a[r][c].valuation();
                best = r;
            }
        }
        if (best == rows) throw MathError("field map is not injective");
        std::swap(a[best], a[next]);
        const PAdic inv = a[next][c].inverse();
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == next || a[r][c].is_zero()) continue;
            const PAdic factor = a[r][c] * inv;
            for (std::size_t k = c; k <= cols; ++k) a[r][k] = a[r][k].add_relaxed(-(factor * a[next][k]));
        }
        pivot_row[c] = next++;
    }
    std::vector<PAdic> x(cols);
    for (std::size_t c = 0; c < cols; ++c) x[c] = a[pivot_row[c]][cols] / a[pivot_row[c]][c];
    FieldElement result(src_, std::move(x));
    if (!(apply(result) == y)) throw MathError("element is not in the image of the field map");
    return result;
}

bool FieldMap::in_image(const FieldElement& y) const {
    try {
        (void)preimage(y);
        return true;
    } catch (const PrecisionUnderflow&) {
        throw;
    } catch (const MathError&) {
        return false;
    }
}

FieldMap FieldMap::compose(const FieldMap& inner) const {
    if (inner.dst_ != src_) throw MathError("composition of incompatible field maps");
    std::vector<FieldElement> images;
    for (const auto& im : inner.images_) images.push_back(apply(im));
    return {inner.src_, dst_, std::move(images)};
}

bool FieldMap::is_identity() const {
    if (src_ != dst_) return false;
    return *this == identity(src_);
}

bool FieldMap::operator==(const FieldMap& o) const {
    if (src_ != o.src_ || dst_ != o.dst_) return false;
    for (std::size_t j = 0; j < images_.size(); ++j) {
        if (!(images_[j] == o.images_[j])) return false;
    }
    return true;
}

std::vector<FieldMap> embeddings(const FieldPtr& src, const FieldPtr& dst) {
    if (src->p() != dst->p()) return {};
    const std::vector<FieldPtr> tower = src->tower();
    // Partial maps: images of the first j generators, plus images of the coordinate monomials.
    struct Partial {
        std::vector<FieldElement> images;
        std::vector<FieldElement> monomials;
    };
    std::vector<Partial> current = {{{}, {dst->one()}}};
    for (std::size_t j = 1; j < tower.size(); ++j) {
        std::vector<Partial> extended;
        const FieldElement c = tower[j]->step_constant();
        for (const auto& part : current) {
            FieldElement c_img = dst->zero();
            for (std::size_t i = 0; i < c.coords().size(); ++i) {
                if (!c.coords()[i].is_zero()) c_img = c_img + part.monomials[i].scaled(c.coords()[i]);
            }
            const auto root = dst->sqrt(c_img);
            if (!root) continue;
            for (const FieldElement& r : {*root, -*root}) {
                Partial next{part.images, part.monomials};
                next.images.push_back(r);
                const std::size_t n = next.monomials.size();
                for (std::size_t i = 0; i < n; ++i) next.monomials.push_back(next.monomials[i] * r);
                extended.push_back(std::move(next));
            }
        }
        current = std::move(extended);
    }
    std::vector<FieldMap> out;
    out.reserve(current.size());
    for (auto& part : current) out.emplace_back(src, dst, std::move(part.images));
    return out;
}

int automorphism_order(const FieldMap& sigma, int max_order) {
    if (sigma.source() != sigma.target()) throw MathError("automorphism_order needs an endomorphism");
    FieldMap power = sigma;
    for (int k = 1; k <= max_order; ++k) {
        if (power.is_identity()) return k;
        power = sigma.compose(power);
    }
    return 0;
}

}  // namespace gl2dist
