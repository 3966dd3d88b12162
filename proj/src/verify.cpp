#include "zgb/verify.hpp"

namespace zgb {

VerificationReport is_strong_basis(std::span<const Poly> S,
                                   const ReduceOptions& opts) {
    ReduceOptions mopts = opts;
    mopts.exclude_input_copy = false;  // membership test: self-reduction is fine
    VerificationReport rep;
    if (S.empty()) return rep;
    const Ring& R = S.front().ctx()->ring;
    auto check = [&](PairKind kind, int i, int j, const Poly& p) {
        if (p.is_zero()) return;
        ++rep.checked_pair_count;
        Poly r = reduce(p, S, mopts);
        if (!r.is_zero()) {
            rep.passed = false;
            rep.failures.push_back({kind, i, j, std::move(r)});
        }
    };
    const int n = static_cast<int>(S.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Poly& f = S[static_cast<size_t>(i)];
            const Poly& g = S[static_cast<size_t>(j)];
            check(PairKind::S, i, j, spoly(f, g));
            if (!R.is_field()) {
                GPoly gp = gpoly(f, g);
                if (!gp.redundant) check(PairKind::Gcd, i, j, gp.p);
            }
        }
        if (R.has_zero_divisors())
            check(PairKind::Ext, i, i, epoly(S[static_cast<size_t>(i)]));
    }
    return rep;
}

bool equivalent(std::span<const Poly> S1, std::span<const Poly> S2,
                const ReduceOptions& opts) {
    ReduceOptions mopts = opts;
    mopts.exclude_input_copy = false;
    for (const Poly& f : S1)
        if (!reduce(f, S2, mopts).is_zero()) return false;
    for (const Poly& g : S2)
        if (!reduce(g, S1, mopts).is_zero()) return false;
    return true;
}

bool in_ideal(const Poly& f, std::span<const Poly> S,
              const ReduceOptions& opts) {
    ReduceOptions mopts = opts;
    mopts.exclude_input_copy = false;
    return reduce(f, S, mopts).is_zero();
}

}  // namespace zgb
