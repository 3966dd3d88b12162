#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "zgb/monomial.hpp"
#include "zgb/ring.hpp"

namespace zgb {

// Shared context of a computation: coefficient ring, ordering, variable
// names (declaration order = significance order, x1 first).
struct Context {
    Ring ring;
    Ordering ord;
    std::vector<std::string> vars;

    static std::shared_ptr<const Context> make(Ring ring, OrdKind kind,
                                               std::vector<std::string> vars);
    int nvars() const { return ord.nvars; }
    bool compatible(const Context& o) const {
        return ring == o.ring && ord == o.ord && vars == o.vars;
    }
};

using CtxPtr = std::shared_ptr<const Context>;

struct Term {
    Coeff c;  // nonzero
    Monomial m;
};

// Sparse polynomial: terms strictly descending under the context ordering,
// no zero coefficients. The zero polynomial is the empty term sequence.
class Poly {
public:
    Poly() = default;
    explicit Poly(CtxPtr ctx) : ctx_(std::move(ctx)) {}
    // Normalizing constructor: sorts, merges like monomials, canonicalizes
    // coefficients, drops zeros.
    Poly(CtxPtr ctx, std::vector<Term> terms);

    const CtxPtr& ctx() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    std::span<const Term> terms() const { return terms_; }
    size_t length() const { return terms_.size(); }

    const Term& leading_term() const;
    const Coeff& leading_coeff() const { return leading_term().c; }
    const Monomial& leading_monomial() const { return leading_term().m; }
    Poly tail() const;
    unsigned degree() const;  // max total degree over all terms; f != 0
    int ecart() const { return static_cast<int>(degree()) -
                               static_cast<int>(leading_monomial().degree()); }

    bool is_constant() const {
        return terms_.size() == 1 && terms_[0].m.is_one();
    }
    bool is_single_term() const { return terms_.size() == 1; }

    Poly neg() const;
    // ZZ: flip sign so lc > 0; QQ: make monic; ZZ/n: unchanged.
    Poly normalized() const;

    bool equals(const Poly& o) const;

    friend Poly add(const Poly& f, const Poly& g);
    friend Poly mul_term(const Poly& f, const Term& t);
    friend Poly mul(const Poly& f, const Poly& g);
    // f + c * x^m * g  (the reduction/combination workhorse)
    friend Poly add_scaled(const Poly& f, const Coeff& c, const Monomial& m,
                           const Poly& g);
    friend Poly sub_scaled(const Poly& f, const Coeff& c, const Monomial& m,
                           const Poly& g);

    static Poly constant(const CtxPtr& ctx, const Coeff& c);
    static Poly from_term(const CtxPtr& ctx, Coeff c, Monomial m);

private:
    CtxPtr ctx_;
    std::vector<Term> terms_;
};

// Largest coefficient bit length in f (0 for the zero polynomial).
long max_coeff_bits(const Poly& f);

}  // namespace zgb
