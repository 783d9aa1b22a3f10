#include "gl2dist/residue_field.hpp"

#include <stdexcept>

#include "gl2dist/errors.hpp"

namespace gl2dist {

namespace {
constexpr std::uint32_t kMaxResidueSize = 2401 * 2401;
constexpr std::uint32_t kNoLog = 0xffffffffu;
}  // namespace

std::shared_ptr<const ResidueField> ResidueField::prime_field(int p) {
    auto f = std::shared_ptr<ResidueField>(new ResidueField());
    f->p_ = p;
    f->q_ = static_cast<std::uint32_t>(p);
    f->build_tables();
    return f;
}

std::shared_ptr<const ResidueField> ResidueField::quadratic(std::shared_ptr<const ResidueField> base, Elem w) {
    if (w == 0 || base->is_square(w)) throw MathError("residue step constant must be a non-square");
    const std::uint64_t q = static_cast<std::uint64_t>(base->q()) * base->q();
    if (q > kMaxResidueSize) throw MathError("residue field too large");
    auto f = std::shared_ptr<ResidueField>(new ResidueField());
    f->p_ = base->p();
    f->q_ = static_cast<std::uint32_t>(q);
    f->steps_ = base->steps_;
    f->steps_.push_back(w);
    f->w_ = w;
    f->base_ = std::move(base);
    f->build_tables();
    return f;
}

ResidueField::Elem ResidueField::add(Elem a, Elem b) const {
    if (!base_) return (a + b) % q_;
    const std::uint32_t qb = base_->q();
    return base_->add(a % qb, b % qb) + qb * base_->add(a / qb, b / qb);
}

ResidueField::Elem ResidueField::neg(Elem a) const {
    if (!base_) return (q_ - a) % q_;
    const std::uint32_t qb = base_->q();
    return base_->neg(a % qb) + qb * base_->neg(a / qb);
}

ResidueField::Elem ResidueField::mul_slow(Elem a, Elem b) const {
    if (!base_) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % q_);
    const std::uint32_t qb = base_->q();
    const Elem a0 = a % qb, a1 = a / qb, b0 = b % qb, b1 = b / qb;
    const Elem lo = base_->add(base_->mul(a0, b0), base_->mul(base_->mul(a1, b1), w_));
    const Elem hi = base_->add(base_->mul(a0, b1), base_->mul(a1, b0));
    return lo + qb * hi;
}

ResidueField::Elem ResidueField::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (log_.empty()) return mul_slow(a, b);
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

ResidueField::Elem ResidueField::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

ResidueField::Elem ResidueField::inv(Elem a) const {
    if (a == 0) throw MathError("residue inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t ResidueField::log(Elem a) const {
    if (a == 0 || a >= q_) throw MathError("discrete log of zero");
    return log_[a];
}

ResidueField::Elem ResidueField::exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }

bool ResidueField::is_square(Elem a) const {
    if (a == 0) return true;
    return log(a) % 2 == 0;
}

bool ResidueField::sqrt(Elem a, Elem& root) const {
    if (a == 0) {
        root = 0;
        return true;
    }
    const std::uint32_t l = log(a);
    if (l % 2 != 0) return false;
    const Elem r1 = exp_[l / 2];
    const Elem r2 = neg(r1);
    root = r1 < r2 ? r1 : r2;
    return true;
}

void ResidueField::build_tables() {
    const std::uint32_t order = q_ - 1;
    std::vector<Elem> seq(order);
    for (Elem g = 1; g < q_; ++g) {
        Elem x = 1;
        bool ok = true;
        for (std::uint32_t k = 0; k < order; ++k) {
            seq[k] = x;
            x = mul_slow(x, g);
            if (x == 1 && k + 1 < order) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        gen_ = g;
        exp_ = seq;
        log_.assign(q_, kNoLog);
        for (std::uint32_t k = 0; k < order; ++k) log_[exp_[k]] = k;
        return;
    }
    throw MathError("no generator of the residue field found (step constant not a non-square?)");
}

}  // namespace gl2dist
