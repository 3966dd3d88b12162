#include "zgb/reduce.hpp"

#include <algorithm>
#include <unordered_map>

namespace zgb {

void check_deadline(const std::optional<Deadline>& d) {
    if (d && std::chrono::steady_clock::now() > *d)
        throw TimedOut("deadline exceeded");
}

bool term_divides(const Term& g, const Term& h, const Ring& R) {
    return g.m.divides(h.m) && R.divides(g.c, h.c);
}

Poly reduce_global(const Poly& f, std::span<const Poly> G,
                   const ReduceOptions& opts) {
    if (f.ctx() && f.ctx()->ord.is_local())
        throw Error("reduce_global requires a global ordering");
    const Ring& R = f.ctx() ? f.ctx()->ring : Ring::integers();
    Poly h = f;
    std::vector<Term> head;  // irreducible leading terms (tail_reduce)
    long steps = 0;
    while (!h.is_zero()) {
        // Single steps can be expensive once coefficients grow; a clock read
        // is cheap by comparison, so check the deadline every iteration.
        ++steps;
        check_deadline(opts.deadline);
        const Term& lt = h.leading_term();
        const Poly* div = nullptr;
        for (const Poly& g : G) {
            if (!g.is_zero() && term_divides(g.leading_term(), lt, R)) {
                div = &g;
                break;
            }
        }
        const bool euclid_here =
            opts.euclidean || (opts.euclidean_tail && !head.empty());
        if (!div && euclid_here && R.kind() == RingKind::Integers) {
            // No exact divisor: shrink the coefficient with symmetric
            // remainder modulo the gcd of ALL applicable leading
            // coefficients, expressed as a Bezout combination. A single
            // reducer only halves the coefficient per step; the full gcd
            // collapses the whole divisor chain at this monomial at once.
            Int g;  // running gcd, 0 = empty
            std::vector<std::pair<const Poly*, Int>> comb;  // (reducer, cofactor)
            for (const Poly& p : G) {
                if (p.is_zero() || !p.leading_monomial().divides(lt.m))
                    continue;
                Int d(p.leading_coeff().get_num());
                if (sgn(g) == 0) {
                    g = abs(d);
                    comb.push_back({&p, Int(sgn(d) < 0 ? -1 : 1)});
                } else {
                    Int ng, s, t;
                    mpz_gcdext(ng.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                               g.get_mpz_t(), d.get_mpz_t());
                    if (ng == g) continue;  // no improvement
                    for (auto& [q_, c_] : comb) c_ *= s;
                    comb.push_back({&p, t});
                    g = ng;
                }
                if (g == 1) break;
            }
            if (sgn(g) != 0) {
                Int c(lt.c.get_num()), q, r;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(),
                            g.get_mpz_t());
                if (cmp(2 * abs(r), g) > 0) q += sgn(r) < 0 ? -1 : 1;
                if (sgn(q) != 0) {
                    const Monomial m = lt.m;  // h is about to be replaced
                    for (const auto& [p, cf] : comb)
                        h = sub_scaled(h, Coeff(q * cf),
                                       m.quotient(p->leading_monomial()), *p);
                    continue;
                }
            }
        }
        if (div) {
            Coeff q = R.quotient(lt.c, div->leading_coeff());
            h = sub_scaled(h, q, lt.m.quotient(div->leading_monomial()), *div);
        } else if (opts.tail_reduce) {
            head.push_back(lt);
            h = h.tail();
        } else {
            break;
        }
    }
    if (head.empty()) return h;
    std::vector<Term> out = std::move(head);
    for (const auto& t : h.terms()) out.push_back(t);
    return Poly(f.ctx(), std::move(out));
}

namespace {

struct Reducer {
    Poly p;
    int ecart;
    // The copy of the input polynomial augmented into T feeds gcd-pair
    // generation only; selecting it as a reducer would fold the input into
    // the accumulated unit and short-circuits the published traces.
    bool selectable = true;
};

uint64_t structural_hash(const Poly& p) {
    uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](uint64_t v) {
        h ^= v;
        h *= 1099511628211ULL;
    };
    for (const auto& t : p.terms()) {
        for (int i = 0; i < t.m.nvars(); ++i) mix(t.m.exp(i));
        mix(mpz_fdiv_ui(t.c.get_num().get_mpz_t(), 0xFFFFFFFBu));
        mix(static_cast<uint64_t>(sgn(t.c) < 0));
    }
    return h;
}

struct ReducerIndex {
    std::unordered_multimap<uint64_t, size_t> by_hash;

    bool contains(const std::vector<Reducer>& T, const Poly& p) const {
        auto [lo, hi] = by_hash.equal_range(structural_hash(p));
        for (auto it = lo; it != hi; ++it)
            if (T[it->second].p.equals(p)) return true;
        return false;
    }
    void add(const std::vector<Reducer>& T, size_t i) {
        by_hash.emplace(structural_hash(T[i].p), i);
    }
};

}  // namespace

MoraResult reduce_mora(const Poly& f, std::span<const Poly> G,
                       const ReduceOptions& opts) {
    if (f.ctx() && f.ctx()->ord.is_global())
        throw Error("reduce_mora requires a local ordering");
    const Ring& R = f.ctx()->ring;
    if (R.is_field()) throw Error("reduce_mora: ring must be ZZ or ZZ/n");

    std::vector<Reducer> T;
    ReducerIndex index;
    T.reserve(G.size());
    for (const Poly& g : G) {
        if (g.is_zero()) continue;
        T.push_back({g, g.ecart()});
        index.add(T, T.size() - 1);
    }

    MoraResult res{f, {}};
    Poly& h = res.nf;
    long steps = 0;
    while (!h.is_zero()) {
        check_deadline(opts.deadline);
        const Term& lt = h.leading_term();
        int chosen = -1;
        for (size_t i = 0; i < T.size(); ++i) {
            if (T[i].selectable &&
                term_divides(T[i].p.leading_term(), lt, R) &&
                (chosen < 0 || T[i].ecart < T[static_cast<size_t>(chosen)].ecart))
                chosen = static_cast<int>(i);
        }
        if (chosen < 0) break;
        if (++steps > opts.iteration_cap)
            throw CapExceeded("reduce_mora iteration cap exceeded");
        const Reducer g = T[static_cast<size_t>(chosen)];
        if (g.ecart > h.ecart()) {
            std::vector<Poly> grown;
            grown.push_back(h);
            size_t old = T.size();
            for (size_t i = 0; i < old; ++i) {
                if (!opts.gcd_augment) break;
                // A gcd-poly is redundant exactly when one leading coefficient
                // divides the other; skip those without building the combination.
                const Coeff& a = h.leading_coeff();
                const Coeff& b = T[i].p.leading_coeff();
                if (R.divides(a, b) || R.divides(b, a)) continue;
                GPoly gp = gpoly(h, T[i].p);
                if (!gp.redundant) grown.push_back(std::move(gp.p));
            }
            for (Poly& p : grown) {
                if (p.is_zero() || index.contains(T, p)) continue;
                T.push_back(
                    {p, p.ecart(), !opts.exclude_input_copy || !p.equals(f)});
                index.add(T, T.size() - 1);
                res.augmented.push_back(std::move(p));
            }
        }
        h = spoly(h, g.p);
    }
    return res;
}

Poly reduce(const Poly& f, std::span<const Poly> G, const ReduceOptions& opts) {
    if (f.is_zero()) return f;
    if (f.ctx()->ord.is_global()) return reduce_global(f, G, opts);
    return reduce_mora(f, G, opts).nf;
}

std::vector<Poly> interreduce(std::vector<Poly> S) {
    std::vector<Poly> in;
    for (Poly& p : S)
        if (!p.is_zero()) in.push_back(p.normalized());
    if (in.empty()) return in;
    const Ring& R = in.front().ctx()->ring;
    const Ordering& ord = in.front().ctx()->ord;
    // Visit in a divisor-first order: a proper term divisor has smaller or
    // equal monomial degree and smaller or equal |coefficient|.
    std::stable_sort(in.begin(), in.end(), [&](const Poly& a, const Poly& b) {
        const Term& ta = a.leading_term();
        const Term& tb = b.leading_term();
        if (ta.m.degree() != tb.m.degree()) return ta.m.degree() < tb.m.degree();
        int c = compare(ta.m, tb.m, Ordering{OrdKind::DegRevLex, ta.m.nvars()});
        if (c != 0) return c < 0;
        return cmp(abs(ta.c), abs(tb.c)) < 0;
    });
    std::vector<Poly> kept;
    for (const Poly& p : in) {
        bool covered = false;
        for (const Poly& k : kept) {
            if (term_divides(k.leading_term(), p.leading_term(), R)) {
                covered = true;
                break;
            }
        }
        if (!covered) kept.push_back(p);
    }
    // Canonical output order: descending leading monomials.
    std::stable_sort(kept.begin(), kept.end(), [&](const Poly& a, const Poly& b) {
        return compare(a.leading_monomial(), b.leading_monomial(), ord) > 0;
    });
    return kept;
}

}  // namespace zgb
