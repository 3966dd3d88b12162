#include "zgb/pairs.hpp"

namespace zgb {

Poly spoly(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) throw Error("spoly: zero input");
    const Ring& R = f.ctx()->ring;
    const Monomial L = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Monomial af = L.quotient(f.leading_monomial());
    Monomial ag = L.quotient(g.leading_monomial());
    Coeff cf, cg;  // lcm(c_f,c_g)/c_f and lcm(c_f,c_g)/c_g
    if (R.is_field()) {
        cf = 1 / f.leading_coeff();
        cg = 1 / g.leading_coeff();
    } else {
        // Integer lcm of the representatives; quotients exact over ZZ.
        Int l = lcm(f.leading_coeff().get_num(), g.leading_coeff().get_num());
        cf = R.canon(Coeff(l / f.leading_coeff().get_num()));
        cg = R.canon(Coeff(l / g.leading_coeff().get_num()));
    }
    Poly scaled = mul_term(f, {cf, af});
    return sub_scaled(scaled, cg, ag, g);
}

GPoly gpoly(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) throw Error("gpoly: zero input");
    const Ring& R = f.ctx()->ring;
    IdealGenPair b = ideal_gen_pair(R, f.leading_coeff(), g.leading_coeff());
    const Monomial L = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Monomial af = L.quotient(f.leading_monomial());
    Monomial ag = L.quotient(g.leading_monomial());
    Poly scaled = mul_term(f, {b.df, af});
    Poly p = add_scaled(scaled, b.dg, ag, g);
    return {std::move(p), b.redundant};
}

Poly epoly(const Poly& f) {
    if (f.is_zero()) throw Error("epoly: zero input");
    const Ring& R = f.ctx()->ring;
    Coeff a = annihilator(R, f.leading_coeff());
    if (R.is_zero(a)) return Poly(f.ctx());
    return mul_term(f, {a, Monomial::one(f.ctx()->nvars())});
}

bool PairQueue::Less::operator()(const CriticalPair& a,
                                 const CriticalPair& b) const {
    if (a.lcm.degree() != b.lcm.degree())
        return a.lcm.degree() < b.lcm.degree();
    // Fixed DegRevLex tie ordering, independent of the run's ordering.
    int c = compare(a.lcm, b.lcm, Ordering{OrdKind::DegRevLex, a.lcm.nvars()});
    if (c != 0) return c < 0;
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.seq < b.seq;
}

void PairQueue::update(const std::vector<Poly>& basis, int new_index) {
    update(basis, new_index, std::vector<char>(basis.size(), 1));
}

void PairQueue::update(const std::vector<Poly>& basis, int new_index,
                       const std::vector<char>& active) {
    const Poly& h = basis[static_cast<size_t>(new_index)];
    const Ring& R = h.ctx()->ring;
    for (int i = 0; i < new_index; ++i) {
        if (!active[static_cast<size_t>(i)]) continue;
        const Poly& g = basis[static_cast<size_t>(i)];
        Monomial L = Monomial::lcm(g.leading_monomial(), h.leading_monomial());
        bool redundant = R.divides(g.leading_coeff(), h.leading_coeff()) ||
                         R.divides(h.leading_coeff(), g.leading_coeff());
        bool want_gcd = !R.is_field() && !redundant;
        bool want_s = strategy_ == Strategy::ALL || !want_gcd;
        if (want_gcd)
            pending_.insert({PairKind::Gcd, i, new_index, L, seq_++});
        if (want_s)
            pending_.insert({PairKind::S, i, new_index, L, seq_++});
    }
    if (R.has_zero_divisors() && !R.is_zero(annihilator(R, h.leading_coeff())))
        pending_.insert({PairKind::Ext, new_index, new_index,
                         h.leading_monomial(), seq_++});
}

CriticalPair PairQueue::select() {
    if (pending_.empty()) throw Error("select on empty pair queue");
    auto it = pending_.begin();
    CriticalPair p = *it;
    pending_.erase(it);
    return p;
}

Poly materialize(const CriticalPair& p, const std::vector<Poly>& basis) {
    const Poly& f = basis[static_cast<size_t>(p.i)];
    switch (p.kind) {
        case PairKind::S:
            return spoly(f, basis[static_cast<size_t>(p.j)]);
        case PairKind::Gcd:
            return gpoly(f, basis[static_cast<size_t>(p.j)]).p;
        case PairKind::Ext:
            return epoly(f);
    }
    throw Error("bad pair kind");
}

}  // namespace zgb
