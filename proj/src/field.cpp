#include "gl2dist/field.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "gl2dist/errors.hpp"

namespace gl2dist {

namespace {

// Least absolute precision (valuation + digits) over nonzero coordinates.
int absolute_precision(const std::vector<PAdic>& cs) {
    int a = INT_MAX;
    for (const auto& c : cs) {
        if (!c.is_zero()) a = std::min(a, c.valuation() + c.digits());
    }
    return a;
}

int min_valuation(const std::vector<PAdic>& cs) {
    int v = INT_MAX;
    for (const auto& c : cs) {
        if (!c.is_zero()) v = std::min(v, c.valuation());
    }
    return v;
}

std::vector<PAdic> concat(const std::vector<PAdic>& lo, const std::vector<PAdic>& hi) {
    std::vector<PAdic> out(lo);
    out.insert(out.end(), hi.begin(), hi.end());
    return out;
}

}  // namespace

void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!a.field() || a.field() != b.field()) throw MathError("elements of different fields");
}

// ---------------------------------------------------------------- FieldElement

FieldElement::FieldElement(FieldPtr field, std::vector<PAdic> coords) : field_(std::move(field)), coords_(std::move(coords)) {
    if (!field_) throw MathError("element without a field");
    if (coords_.size() != static_cast<std::size_t>(field_->degree())) {
        throw MathError("coordinate count does not match the field degree");
    }
    normalize();
}

void FieldElement::normalize() {
    const int a = absolute_precision(coords_);
    if (a == INT_MAX) return;
    for (auto& c : coords_) {
        if (c.is_zero()) continue;
        if (c.valuation() >= a) {
            c = PAdic::zero(c.prime(), c.precision());
        } else {
            c = c.with_digits(a - c.valuation());
        }
    }
}

bool FieldElement::is_zero() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](const PAdic& c) { return c.is_zero(); });
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_field(*this, o);
    std::vector<PAdic> out(coords_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coords_[i].add_relaxed(o.coords_[i]);
    return {field_, std::move(out)};
}

FieldElement FieldElement::operator-() const {
    std::vector<PAdic> out(coords_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = -coords_[i];
    return {field_, std::move(out)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_field(*this, o);
    const Field& f = *field_;
    if (f.depth() == 0) return {field_, {coords_[0] * o.coords_[0]}};
    // (a + bt)(c + dt) = (ac + bd·t²) + (ad + bc)t
    const FieldElement a = lower(), b = upper(), c = o.lower(), d = o.upper();
    const FieldElement lo = a * c + b * d * f.step_constant();
    const FieldElement hi = a * d + b * c;
    return {field_, concat(lo.coords_, hi.coords_)};
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw MathError("inverse of zero");
    const Field& f = *field_;
    if (f.depth() == 0) return {field_, {coords_[0].inverse()}};
    const FieldElement a = lower(), b = upper();
    const FieldElement n_inv = (a * a - b * b * f.step_constant()).inverse();
    const FieldElement lo = a * n_inv;
    const FieldElement hi = -(b * n_inv);
    return {field_, concat(lo.coords_, hi.coords_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

FieldElement FieldElement::pow(const mpz_class& e) const {
    if (e < 0) return inverse().pow(mpz_class(-e));
    FieldElement result = field_->one();
    FieldElement base = *this;
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

FieldElement FieldElement::pow(long long e) const { return pow(mpz_class(static_cast<long>(e))); }

FieldElement FieldElement::scaled(const PAdic& c) const {
    std::vector<PAdic> out(coords_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coords_[i] * c;
    return {field_, std::move(out)};
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (!field_ || field_ != o.field_) return false;
    return (*this - o).is_zero();
}

FieldElement FieldElement::lower() const {
    if (field_->depth() == 0) throw MathError("lower() on the base field");
    const std::size_t h = coords_.size() / 2;
    return {field_->base_field(), std::vector<PAdic>(coords_.begin(), coords_.begin() + static_cast<long>(h))};
}

FieldElement FieldElement::upper() const {
    if (field_->depth() == 0) throw MathError("upper() on the base field");
    const std::size_t h = coords_.size() / 2;
    return {field_->base_field(), std::vector<PAdic>(coords_.begin() + static_cast<long>(h), coords_.end())};
}

std::string FieldElement::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ", ";
        os << coords_[i].str();
    }
    os << "]";
    return os.str();
}

// ----------------------------------------------------------------------- Field

FieldPtr Field::base(int p, int precision) {
    if (precision < 8) throw MathError("precision must be at least 8");
    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->precision_ = precision;
    f->name_ = "Q" + std::to_string(p);
    (void)PAdic::zero(p, precision);  // validates p
    f->residue_ = ResidueField::prime_field(p);
    f->finish();
    return f;
}

FieldPtr Field::quadratic(const FieldPtr& base, const FieldElement& c, std::string name) {
    if (!base || c.field() != base) throw MathError("step constant must lie in the base field");
    if (c.is_zero()) throw MathError("cannot adjoin the square root of zero");
    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = base->p_;
    f->precision_ = base->precision_;
    f->depth_ = base->depth_ + 1;
    f->base_ = base;
    f->name_ = std::move(name);
    const long long k = base->valuation(c);
    f->step_valuation_ = k;
    const long long h = k >= 0 ? k / 2 : -((-k + 1) / 2);  // floor(k/2)
    const FieldElement pi_h = base->uniformizer().pow(h);
    const FieldElement pi_h_inv = pi_h.inverse();
    if (k % 2 == 0) {
        const FieldElement w = c * pi_h_inv * pi_h_inv;
        const ResidueField::Elem wbar = base->reduce(w);
        if (base->residue_field().is_square(wbar)) throw MathError("step constant is a square in the base field");
        f->kind_ = StepKind::Unramified;
        f->e_ = base->e_;
        f->f_ = base->f_ * 2;
        f->residue_ = ResidueField::quadratic(base->residue_, wbar);
    } else {
        f->kind_ = StepKind::Ramified;
        f->e_ = base->e_ * 2;
        f->f_ = base->f_;
        f->residue_ = base->residue_;
    }
    f->held_ = {c, pi_h, pi_h_inv};
    f->finish();
    return f;
}

void Field::finish() {
    if (depth_ == 0) {
        uniformizer_ = {PAdic::from_int(p_, p_, precision_)};
    } else if (kind_ == StepKind::Unramified) {
        uniformizer_ = from_base(base_->uniformizer()).coords();
    } else {
        // t / π_B^h has valuation k - 2h = 1.
        uniformizer_ = (generator() * from_base(held_[2])).coords();
    }
    uniformizer_inv_ = FieldElement(self(), uniformizer_).inverse().coords();

    // Teichmüller lift of the residue generator: x ↦ x^q contracts towards μ_{q-1}.
    const mpz_class q(static_cast<unsigned long>(residue_->q()));
    const int max_iter = e_ * precision_ + 8;
    if (depth_ > 0 && kind_ == StepKind::Unramified) {
        // Iterate in the integral basis {1, u}, u = t/π_B^h, u² = w a unit: in the flat basis the
        // t-coordinate of a unit has valuation -h, which costs digits at every product.
        const FieldElement w = held_[0] * held_[2] * held_[2];
        using Pair = std::pair<FieldElement, FieldElement>;
        const auto mul = [&w](const Pair& x, const Pair& y) -> Pair {
            return {x.first * y.first + x.second * y.second * w, x.first * y.second + x.second * y.first};
        };
        const auto power = [&](Pair x) {
            Pair r{base_->one(), base_->zero()};
            for (mpz_class k = q; k > 0; k >>= 1) {
                if (mpz_odd_p(k.get_mpz_t())) r = mul(r, x);
                if (k > 1) x = mul(x, x);
            }
            return r;
        };
        const std::uint32_t qb = base_->q();
        const ResidueField::Elem r = residue_->generator();
        Pair g{base_->lift(r % qb), base_->lift(r / qb)};
        for (int i = 0; i < max_iter; ++i) {
            Pair next = power(g);
            if (next.first == g.first && next.second == g.second) break;
            g = std::move(next);
        }
        teich_gen_ = concat(g.first.coords(), (g.second * held_[2]).coords());
        return;
    }
    FieldElement g = lift(residue_->generator());
    for (int i = 0; i < max_iter; ++i) {
        FieldElement next = g.pow(q);
        if (next == g) break;
        g = next;
    }
    teich_gen_ = g.coords();
}

std::vector<FieldPtr> Field::tower() const {
    std::vector<FieldPtr> out;
    for (FieldPtr f = self(); f; f = f->base_) out.push_back(f);
    std::reverse(out.begin(), out.end());
    return out;
}

const FieldElement& Field::step_constant() const {
    if (depth_ == 0) throw MathError("the base field has no step constant");
    return held_[0];
}

FieldElement Field::generator() const {
    if (depth_ == 0) throw MathError("the base field has no generator");
    std::vector<PAdic> cs(static_cast<std::size_t>(degree()), PAdic::zero(p_, precision_));
    cs[static_cast<std::size_t>(degree() / 2)] = PAdic::from_int(p_, 1, precision_);
    return {self(), std::move(cs)};
}

FieldElement Field::uniformizer() const { return {self(), uniformizer_}; }

FieldElement Field::teichmuller_generator() const { return {self(), teich_gen_}; }

FieldElement Field::zero() const {
    return {self(), std::vector<PAdic>(static_cast<std::size_t>(degree()), PAdic::zero(p_, precision_))};
}

FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(long long n) const { return scalar(PAdic::from_int(p_, n, precision_)); }

FieldElement Field::scalar(const PAdic& x) const {
    std::vector<PAdic> cs(static_cast<std::size_t>(degree()), PAdic::zero(p_, precision_));
    cs[0] = x;
    return {self(), std::move(cs)};
}

FieldElement Field::element(const std::vector<long long>& coords) const {
    if (coords.size() != static_cast<std::size_t>(degree())) throw MathError("wrong number of coordinates");
    std::vector<PAdic> cs;
    cs.reserve(coords.size());
    for (long long c : coords) cs.push_back(PAdic::from_int(p_, c, precision_));
    return {self(), std::move(cs)};
}

FieldElement Field::from_base(const FieldElement& x) const {
    const Field* f = this;
    while (f && f != x.field().get()) f = f->base_.get();
    if (!f) throw MathError("element does not lie in a subfield of the tower");
    std::vector<PAdic> cs = x.coords();
    cs.resize(static_cast<std::size_t>(degree()), PAdic::zero(p_, precision_));
    return {self(), std::move(cs)};
}

long long Field::valuation(const FieldElement& x) const {
    if (x.field().get() != this) throw MathError("valuation: element of another field");
    if (x.is_zero()) throw MathError("valuation of zero");
    const auto& cs = x.coords();
    if (absolute_precision(cs) - min_valuation(cs) < kMinSignificantDigits) {
        throw PrecisionUnderflow("element known to too few digits for its valuation");
    }
    if (depth_ == 0) return cs[0].valuation();
    const FieldElement a = x.lower(), b = x.upper();
    const long long k = step_valuation_;
    long long v = LLONG_MAX;
    if (kind_ == StepKind::Unramified) {
        if (!a.is_zero()) v = base_->valuation(a);
        if (!b.is_zero()) v = std::min(v, base_->valuation(b) + k / 2);
    } else {
        if (!a.is_zero()) v = 2 * base_->valuation(a);
        if (!b.is_zero()) v = std::min(v, 2 * base_->valuation(b) + k);
    }
    return v;
}

ResidueField::Elem Field::reduce(const FieldElement& x) const {
    if (x.field().get() != this) throw MathError("reduce: element of another field");
    if (x.is_zero()) return 0;
    if (valuation(x) < 0) throw MathError("reduce: element is not integral");
    if (depth_ == 0) return static_cast<ResidueField::Elem>(x.coords()[0].residue());
    const FieldElement a = x.lower();
    const ResidueField::Elem r0 = base_->reduce(a);
    if (kind_ == StepKind::Ramified) return r0;
    const ResidueField::Elem r1 = base_->reduce(x.upper() * held_[1]);
    return r0 + base_->q() * r1;
}

FieldElement Field::lift(ResidueField::Elem r) const {
    if (r >= q()) throw MathError("lift: residue out of range");
    if (depth_ == 0) return from_int(static_cast<long long>(r));
    if (kind_ == StepKind::Ramified) return from_base(base_->lift(r));
    const std::uint32_t qb = base_->q();
    const FieldElement a = base_->lift(r % qb);
    const FieldElement b = base_->lift(r / qb) * held_[2];
    return {self(), concat(a.coords(), b.coords())};
}

FieldElement Field::teichmuller(ResidueField::Elem r) const {
    if (r == 0) throw MathError("teichmuller of the zero residue");
    return teichmuller_generator().pow(static_cast<long long>(residue_->log(r)));
}

TameCoords Field::tame_coords(const FieldElement& x) const {
    const long long v = valuation(x);
    const FieldElement unit = x * FieldElement(self(), uniformizer_inv_).pow(v);
    const ResidueField::Elem r = reduce(unit);
    return {v, residue_->log(r)};
}

bool Field::is_square(const FieldElement& x) const {
    const TameCoords tc = tame_coords(x);
    return tc.valuation % 2 == 0 && tc.log % 2 == 0;
}

std::optional<FieldElement> Field::sqrt(const FieldElement& x) const {
    if (x.is_zero()) return zero();
    const long long v = valuation(x);
    if (v % 2 != 0) return std::nullopt;
    const FieldElement unit = x * FieldElement(self(), uniformizer_inv_).pow(v);
    ResidueField::Elem r = 0;
    if (!residue_->sqrt(reduce(unit), r)) return std::nullopt;
    // Newton: y ← (y + u/y)/2 from a residue-level root; quadratic convergence.
    const PAdic half = PAdic::from_rational(p_, 1, 2, precision_);
    FieldElement y = lift(r);
    for (int i = 0; i < 64; ++i) {
        FieldElement next = (y + unit / y).scaled(half);
        if (next == y) break;
        y = next;
    }
    if (!(y * y == unit)) throw PrecisionUnderflow("square root iteration did not converge");
    return y * uniformizer().pow(v / 2);
}

PAdic Field::absolute_trace(const FieldElement& x) const {
    if (x.field().get() != this) throw MathError("trace: element of another field");
    return x.coords()[0] * PAdic::from_int(p_, 1LL << depth_, precision_);
}

int Field::hilbert_symbol(const FieldElement& a, const FieldElement& b) const {
    const TameCoords ta = tame_coords(a), tb = tame_coords(b);
    // (-1)^{αβ} a^β b^{-α} is a unit; the symbol is its residue raised to (q-1)/2.
    const long long qm1 = static_cast<long long>(q()) - 1;
    long long l = ((ta.valuation * tb.valuation) & 1) * (qm1 / 2) + tb.valuation * ta.log - ta.valuation * tb.log;
    l %= qm1;
    if (l < 0) l += qm1;
    return l % 2 == 0 ? 1 : -1;
}

std::string Field::describe() const {
    std::ostringstream os;
    os << name_ << " (degree " << degree() << ", e=" << e_ << ", f=" << f_ << ", q=" << q() << ")";
    return os.str();
}

}  // namespace gl2dist
