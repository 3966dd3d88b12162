#include "zgb/monomial.hpp"

namespace zgb {

namespace {

// Lex: first nonzero entry of a-b decides (positive => a greater).
int cmp_lex(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.nvars(); ++i) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? 1 : -1;
    }
    return 0;
}

// Degrevlex tie-break on equal total degree: the vector a-b whose last
// nonzero entry is negative is the greater one.
int cmp_revlex_tie(const Monomial& a, const Monomial& b) {
    for (int i = a.nvars() - 1; i >= 0; --i) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
    }
    return 0;
}

}  // namespace

int compare(const Monomial& a, const Monomial& b, const Ordering& ord) {
    if (a.nvars() != ord.nvars || b.nvars() != ord.nvars)
        throw Error("monomial dimension mismatch");
    switch (ord.kind) {
        case OrdKind::Lex:
            return cmp_lex(a, b);
        case OrdKind::DegRevLex:
            if (a.degree() != b.degree())
                return a.degree() > b.degree() ? 1 : -1;
            return cmp_revlex_tie(a, b);
        case OrdKind::NegLex:
            return -cmp_lex(a, b);
        case OrdKind::NegDegRevLex:
            if (a.degree() != b.degree())
                return a.degree() < b.degree() ? 1 : -1;
            return cmp_revlex_tie(a, b);
    }
    throw Error("bad ordering");
}

}  // namespace zgb
