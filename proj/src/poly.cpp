#include "zgb/poly.hpp"

#include <algorithm>

namespace zgb {

std::shared_ptr<const Context> Context::make(Ring ring, OrdKind kind,
                                             std::vector<std::string> vars) {
    auto n = static_cast<int>(vars.size());
    if (n < 1 || n > Monomial::kMaxVars) throw Error("bad variable count");
    return std::make_shared<const Context>(
        Context{std::move(ring), Ordering{kind, n}, std::move(vars)});
}

namespace {

void require_compatible(const Poly& f, const Poly& g) {
    if (!f.ctx() || !g.ctx() || !f.ctx()->compatible(*g.ctx()))
        throw Error("ring/ordering mismatch");
}

}  // namespace

Poly::Poly(CtxPtr ctx, std::vector<Term> terms) : ctx_(std::move(ctx)) {
    const Ring& R = ctx_->ring;
    const Ordering& ord = ctx_->ord;
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return compare(a.m, b.m, ord) > 0;
    });
    terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!terms_.empty() && terms_.back().m == t.m) {
            terms_.back().c = R.add(terms_.back().c, t.c);
            if (R.is_zero(terms_.back().c)) terms_.pop_back();
        } else {
            Coeff c = R.canon(std::move(t.c));
            if (!R.is_zero(c)) terms_.push_back({std::move(c), t.m});
        }
    }
}

const Term& Poly::leading_term() const {
    if (terms_.empty()) throw Error("zero polynomial has no leading term");
    return terms_.front();
}

Poly Poly::tail() const {
    if (terms_.empty()) throw Error("zero polynomial has no tail");
    Poly r(ctx_);
    r.terms_.assign(terms_.begin() + 1, terms_.end());
    return r;
}

unsigned Poly::degree() const {
    if (terms_.empty()) throw Error("zero polynomial has no degree");
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.m.degree());
    return d;
}

Poly Poly::neg() const {
    Poly r(ctx_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({ctx_->ring.neg(t.c), t.m});
    return r;
}

Poly Poly::normalized() const {
    if (is_zero()) return *this;
    const Ring& R = ctx_->ring;
    switch (R.kind()) {
        case RingKind::Integers:
            return sgn(leading_coeff()) < 0 ? neg() : *this;
        case RingKind::Rationals: {
            Poly r(ctx_);
            r.terms_.reserve(terms_.size());
            const Coeff& lc = leading_coeff();
            for (const auto& t : terms_)
                r.terms_.push_back({R.canon(t.c / lc), t.m});
            return r;
        }
        case RingKind::IntegersMod:
            return *this;
    }
    return *this;
}

bool Poly::equals(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c)
            return false;
    return true;
}

Poly add(const Poly& f, const Poly& g) {
    require_compatible(f, g);
    const Ring& R = f.ctx()->ring;
    const Ordering& ord = f.ctx()->ord;
    Poly r(f.ctx_);
    r.terms_.reserve(f.terms_.size() + g.terms_.size());
    size_t i = 0, j = 0;
    while (i < f.terms_.size() && j < g.terms_.size()) {
        int c = compare(f.terms_[i].m, g.terms_[j].m, ord);
        if (c > 0) {
            r.terms_.push_back(f.terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(g.terms_[j++]);
        } else {
            Coeff s = R.add(f.terms_[i].c, g.terms_[j].c);
            if (!R.is_zero(s)) r.terms_.push_back({std::move(s), f.terms_[i].m});
            ++i;
            ++j;
        }
    }
    for (; i < f.terms_.size(); ++i) r.terms_.push_back(f.terms_[i]);
    for (; j < g.terms_.size(); ++j) r.terms_.push_back(g.terms_[j]);
    return r;
}

Poly mul_term(const Poly& f, const Term& t) {
    const Ring& R = f.ctx()->ring;
    Poly r(f.ctx_);
    if (R.is_zero(t.c)) return r;
    r.terms_.reserve(f.terms_.size());
    for (const auto& ft : f.terms_) {
        Coeff c = R.mul(ft.c, t.c);
        if (!R.is_zero(c)) r.terms_.push_back({std::move(c), ft.m * t.m});
    }
    return r;
}

Poly mul(const Poly& f, const Poly& g) {
    require_compatible(f, g);
    Poly r(f.ctx());
    for (const auto& t : f.terms_) r = add_scaled(r, t.c, t.m, g);
    return r;
}

Poly add_scaled(const Poly& f, const Coeff& c, const Monomial& m,
                const Poly& g) {
    require_compatible(f, g);
    const Ring& R = f.ctx()->ring;
    const Ordering& ord = f.ctx()->ord;
    Poly r(f.ctx_);
    if (R.is_zero(c)) return f;
    r.terms_.reserve(f.terms_.size() + g.terms_.size());
    size_t i = 0, j = 0;
    while (i < f.terms_.size() && j < g.terms_.size()) {
        Monomial gm = g.terms_[j].m * m;
        int cmp = compare(f.terms_[i].m, gm, ord);
        if (cmp > 0) {
            r.terms_.push_back(f.terms_[i++]);
        } else if (cmp < 0) {
            Coeff gc = R.mul(g.terms_[j].c, c);
            if (!R.is_zero(gc)) r.terms_.push_back({std::move(gc), gm});
            ++j;
        } else {
            Coeff s = R.add(f.terms_[i].c, R.mul(g.terms_[j].c, c));
            if (!R.is_zero(s)) r.terms_.push_back({std::move(s), gm});
            ++i;
            ++j;
        }
    }
    for (; i < f.terms_.size(); ++i) r.terms_.push_back(f.terms_[i]);
    for (; j < g.terms_.size(); ++j) {
        Coeff gc = R.mul(g.terms_[j].c, c);
        if (!R.is_zero(gc)) r.terms_.push_back({std::move(gc), g.terms_[j].m * m});
    }
    return r;
}

Poly sub_scaled(const Poly& f, const Coeff& c, const Monomial& m,
                const Poly& g) {
    return add_scaled(f, f.ctx()->ring.neg(c), m, g);
}

Poly Poly::constant(const CtxPtr& ctx, const Coeff& c) {
    return from_term(ctx, c, Monomial::one(ctx->nvars()));
}

Poly Poly::from_term(const CtxPtr& ctx, Coeff c, Monomial m) {
    Poly r(ctx);
    Coeff cc = ctx->ring.canon(std::move(c));
    if (!ctx->ring.is_zero(cc)) r.terms_.push_back({std::move(cc), std::move(m)});
    return r;
}

long max_coeff_bits(const Poly& f) {
    long b = 0;
    for (const auto& t : f.terms()) b = std::max(b, Ring::bit_length(t.c));
    return b;
}

}  // namespace zgb
