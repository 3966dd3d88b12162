#include "zgb/precheck.hpp"

#include <algorithm>

namespace zgb {

namespace {

struct CofPoly {
    Poly p;
    std::vector<Poly> cof;
};

CtxPtr make_qctx(const CtxPtr& zctx) {
    return Context::make(Ring::rationals(), zctx->ord.kind, zctx->vars);
}

Poly embed_q(const Poly& f, const CtxPtr& qctx) {
    std::vector<Term> ts(f.terms().begin(), f.terms().end());
    return Poly(qctx, std::move(ts));
}

void cof_axpy(CofPoly& h, const Coeff& c, const Monomial& m, const CofPoly& g) {
    h.p = add_scaled(h.p, c, m, g.p);
    for (size_t i = 0; i < h.cof.size(); ++i)
        h.cof[i] = add_scaled(h.cof[i], c, m, g.cof[i]);
}

void cof_scale(CofPoly& h, const Coeff& c) {
    const Monomial one = Monomial::one(h.p.ctx()->nvars());
    h.p = mul_term(h.p, {c, one});
    for (auto& q : h.cof) q = mul_term(q, {c, one});
}

CofPoly spoly_cof(const CofPoly& f, const CofPoly& g) {
    const Monomial L =
        Monomial::lcm(f.p.leading_monomial(), g.p.leading_monomial());
    CofPoly r = f;
    cof_scale(r, 1 / f.p.leading_coeff());
    Monomial shift = L.quotient(f.p.leading_monomial());
    if (!shift.is_one()) {
        r.p = mul_term(r.p, {Coeff(1), shift});
        for (auto& q : r.cof) q = mul_term(q, {Coeff(1), shift});
    }
    cof_axpy(r, -1 / g.p.leading_coeff(), L.quotient(g.p.leading_monomial()),
             g);
    return r;
}

// Weak normal form over the field: leading-monomial division only.
void reduce_cof(CofPoly& h, const std::vector<CofPoly>& basis,
                const std::optional<Deadline>& deadline) {
    long steps = 0;
    while (!h.p.is_zero()) {
        if ((++steps & 0xFF) == 0) check_deadline(deadline);
        const Term& lt = h.p.leading_term();
        const CofPoly* div = nullptr;
        for (const auto& g : basis) {
            if (g.p.leading_monomial().divides(lt.m)) {
                div = &g;
                break;
            }
        }
        if (!div) return;
        Coeff q = -(lt.c / div->p.leading_coeff());
        cof_axpy(h, q, lt.m.quotient(div->p.leading_monomial()), *div);
    }
}

// Reduce the non-leading terms of basis[i] against the other elements.
void tail_reduce_cof(std::vector<CofPoly>& basis, size_t i,
                     const std::optional<Deadline>& deadline) {
    for (;;) {
        check_deadline(deadline);
        const auto terms = basis[i].p.terms();
        const CofPoly* div = nullptr;
        Term target;
        for (size_t t = 1; t < terms.size() && !div; ++t) {
            for (size_t j = 0; j < basis.size(); ++j) {
                if (j == i) continue;
                if (basis[j].p.leading_monomial().divides(terms[t].m)) {
                    div = &basis[j];
                    target = terms[t];
                    break;
                }
            }
        }
        if (!div) return;
        Coeff q = -(target.c / div->p.leading_coeff());
        cof_axpy(basis[i], q, target.m.quotient(div->p.leading_monomial()),
                 *div);
    }
}

}  // namespace

QBasisWithCofactors std_q_with_cofactors(std::span<const Poly> generators,
                                         const StdConfig& config) {
    if (generators.empty()) throw Error("precheck: empty generator list");
    const CtxPtr zctx = generators.front().ctx();
    if (!zctx->ord.is_global())
        throw Error("precheck requires a global ordering");
    CtxPtr qctx = make_qctx(zctx);
    const size_t r = generators.size();

    std::vector<CofPoly> basis;
    std::vector<Poly> view;  // plain polynomials for the pair queue
    PairQueue queue(Strategy::ALL);
    bool constant_found = false;

    auto append = [&](CofPoly cp) {
        Coeff inv = 1 / cp.p.leading_coeff();
        cof_scale(cp, inv);
        if (cp.p.is_constant()) constant_found = true;
        view.push_back(cp.p);
        basis.push_back(std::move(cp));
        queue.update(view, static_cast<int>(view.size()) - 1);
    };

    for (size_t i = 0; i < r; ++i) {
        if (generators[i].is_zero()) continue;
        CofPoly cp{embed_q(generators[i], qctx), {}};
        cp.cof.assign(r, Poly(qctx));
        cp.cof[i] = Poly::constant(qctx, Coeff(1));
        append(cp);
        if (constant_found) break;
    }
    if (basis.empty()) throw Error("precheck: all generators are zero");

    unsigned long selected = 0;
    while (!constant_found && !queue.empty()) {
        check_deadline(config.deadline);
        if (++selected > static_cast<unsigned long>(config.pair_cap))
            throw CapExceeded("precheck: pair cap exceeded");
        CriticalPair p = queue.select();
        CofPoly h = spoly_cof(basis[static_cast<size_t>(p.i)],
                              basis[static_cast<size_t>(p.j)]);
        reduce_cof(h, basis, config.deadline);
        if (!h.p.is_zero()) append(std::move(h));
    }

    if (constant_found) {
        // The ideal over QQ is <1>; keep just the constant, scaled to 1.
        CofPoly one = std::move(basis.back());
        basis.clear();
        basis.push_back(std::move(one));
    } else {
        // Minimalize: drop elements with a leading monomial divisible by
        // another retained element's.
        std::stable_sort(basis.begin(), basis.end(),
                         [&](const CofPoly& a, const CofPoly& b) {
                             return compare(a.p.leading_monomial(),
                                            b.p.leading_monomial(),
                                            qctx->ord) < 0;
                         });
        std::vector<CofPoly> kept;
        for (auto& cp : basis) {
            bool covered = false;
            for (const auto& k : kept)
                if (k.p.leading_monomial().divides(cp.p.leading_monomial())) {
                    covered = true;
                    break;
                }
            if (!covered) kept.push_back(std::move(cp));
        }
        basis = std::move(kept);
    }
    for (size_t i = 0; i < basis.size(); ++i)
        tail_reduce_cof(basis, i, config.deadline);
    std::stable_sort(basis.begin(), basis.end(),
                     [&](const CofPoly& a, const CofPoly& b) {
                         return compare(a.p.leading_monomial(),
                                        b.p.leading_monomial(), qctx->ord) > 0;
                     });

    QBasisWithCofactors out;
    out.qctx = qctx;
    for (auto& cp : basis) {
        out.basis.push_back(std::move(cp.p));
        out.cofactors.push_back(std::move(cp.cof));
    }
    return out;
}

namespace {

Int denominator_lcm_of(const std::vector<Poly>& cof) {
    Int L = 1;
    for (const Poly& q : cof)
        for (const auto& t : q.terms())
            L = lcm(L, t.c.get_den());
    return L;
}

Poly cleared_to_zz(const Poly& q, const Int& L, const CtxPtr& zctx) {
    std::vector<Term> ts;
    for (const auto& t : q.terms()) {
        Coeff c = t.c * Coeff(L);
        c.canonicalize();
        if (c.get_den() != 1) throw Error("denominator clearing failed");
        ts.push_back({Coeff(c.get_num()), t.m});
    }
    return Poly(zctx, std::move(ts));
}

}  // namespace

bool Certificate::verify(std::span<const Poly> generators) const {
    if (cofactors.size() != generators.size()) return false;
    Poly acc(target.ctx());
    for (size_t i = 0; i < generators.size(); ++i)
        acc = add(acc, mul(cofactors[i], generators[i]));
    return acc.equals(target);
}

PrecheckResult pre_integer_check(std::span<const Poly> generators,
                                 const StdConfig& config) {
    if (generators.empty()) throw Error("precheck: empty generator list");
    const CtxPtr zctx = generators.front().ctx();
    if (zctx->ring.kind() != RingKind::Integers)
        throw Error("precheck requires ring ZZ");

    QBasisWithCofactors q = std_q_with_cofactors(generators, config);

    // Prefer the constant-1 case; otherwise the minimal monomial element.
    int pick = -1;
    for (size_t i = 0; i < q.basis.size(); ++i) {
        if (!q.basis[i].is_single_term()) continue;
        if (pick < 0 ||
            compare(q.basis[i].leading_monomial(),
                    q.basis[static_cast<size_t>(pick)].leading_monomial(),
                    q.qctx->ord) < 0)
            pick = static_cast<int>(i);
    }
    PrecheckResult res;
    res.generators.assign(generators.begin(), generators.end());
    if (pick < 0) return res;

    const auto& cof = q.cofactors[static_cast<size_t>(pick)];
    Int L = denominator_lcm_of(cof);
    Certificate cert;
    cert.denominator_lcm = L;
    cert.target = Poly::from_term(zctx, Coeff(L),
                                  q.basis[static_cast<size_t>(pick)]
                                      .leading_monomial());
    for (const Poly& qi : cof)
        cert.cofactors.push_back(cleared_to_zz(qi, L, zctx));
    if (!cert.verify(generators))
        throw Error("precheck: cofactor certificate failed to verify");
    res.generators.push_back(cert.target);
    res.certificate = std::move(cert);
    return res;
}

}  // namespace zgb
