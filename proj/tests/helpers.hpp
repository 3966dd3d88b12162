#pragma once

#include <random>
#include <string>
#include <vector>

#include "zgb/engine.hpp"
#include "zgb/io.hpp"
#include "zgb/pairs.hpp"
#include "zgb/poly.hpp"
#include "zgb/reduce.hpp"
#include "zgb/verify.hpp"

namespace zgbtest {

using namespace zgb;

inline CtxPtr make_ctx(Ring ring, OrdKind kind,
                       std::vector<std::string> vars = {"x", "y"}) {
    return Context::make(std::move(ring), kind, std::move(vars));
}

inline CtxPtr zz_dp(std::vector<std::string> vars = {"x", "y"}) {
    return make_ctx(Ring::integers(), OrdKind::DegRevLex, std::move(vars));
}

inline CtxPtr zz_ds(std::vector<std::string> vars = {"x", "y"}) {
    return make_ctx(Ring::integers(), OrdKind::NegDegRevLex, std::move(vars));
}

inline Poly P(const CtxPtr& ctx, const std::string& text) {
    return parse_poly(ctx, text);
}

inline std::vector<Poly> PL(const CtxPtr& ctx,
                            const std::vector<std::string>& texts) {
    std::vector<Poly> out;
    for (const auto& t : texts) out.push_back(parse_poly(ctx, t));
    return out;
}

// Random polynomial matching the appendix generator profile: exponents
// bounded by max_deg total degree, coefficients in [-max_coeff, max_coeff].
inline Poly random_poly(const CtxPtr& ctx, std::mt19937_64& rng,
                        int max_terms = 5, unsigned max_deg = 4,
                        long max_coeff = 100) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<long> coeff(-max_coeff, max_coeff);
    std::uniform_int_distribution<unsigned> expo(0, max_deg);
    std::vector<Term> terms;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Monomial m(ctx->nvars());
        for (int i = 0; i < ctx->nvars(); ++i) {
            unsigned e = expo(rng);
            if (m.degree() + e > max_deg) e = max_deg - m.degree();
            m.set_exp(i, e);
        }
        long c = coeff(rng);
        if (c == 0) c = 1;
        terms.push_back({ctx->ring.canon(Coeff(c)), m});
    }
    return Poly(ctx, std::move(terms));
}

}  // namespace zgbtest
