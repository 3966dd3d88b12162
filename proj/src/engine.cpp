#include "zgb/engine.hpp"

#include <algorithm>
#include <chrono>

namespace zgb {

namespace {

bool is_unit_constant(const Poly& p) {
    return p.is_constant() && p.ctx()->ring.is_unit(p.leading_coeff());
}

void track_bits(StdStats& stats, const Poly& p) {
    stats.max_coeff_bits = std::max(stats.max_coeff_bits, max_coeff_bits(p));
}

}  // namespace

std::vector<Poly> std_basis_with_stats(const std::vector<Poly>& generators,
                                       const StdConfig& config,
                                       StdStats& stats) {
    if (generators.empty()) throw Error("std: empty generator list");
    if (config.enable_pair_criteria)
        throw std::invalid_argument(
            "pair criteria are a reserved extension point, not implemented");
    const CtxPtr ctx = generators.front().ctx();
    if (ctx->ring.is_field())
        throw FieldRingError("std: ring must be ZZ or ZZ/n");
    for (const Poly& g : generators)
        if (!g.ctx() || !g.ctx()->compatible(*ctx))
            throw Error("ring/ordering mismatch");

    const auto t0 = std::chrono::steady_clock::now();
    const bool local = ctx->ord.is_local();
    ReduceOptions ropts;
    ropts.iteration_cap = config.iteration_cap;
    ropts.gcd_augment = config.gcd_augment;
    ropts.deadline = config.deadline;
    // Fully reduce pair polynomials before appending them: over ZZ the weak
    // normal form alone lets tail coefficients snowball across iterations.
    ropts.tail_reduce = !local;

    bool unit_found = false;

    // One Buchberger pass over `gens`, returning the surviving elements.
    // With `euclid` set, pair polynomials are reduced with coefficient
    // remainders (fast, keeps everything small) but the result is only a
    // Grobner basis in the ideal-membership sense; a second pass with exact
    // division completes the coefficient-gcd layer required of a strong
    // basis.
    auto run_pass = [&](const std::vector<Poly>& gens, bool euclid) {
        std::vector<Poly> S;
        // Superseded elements (leading term exactly divisible by a newer
        // one) stay in S so queued pairs still materialize, but are dropped
        // from reducer scans and from pair creation for future elements.
        std::vector<char> active;
        std::vector<Poly> reducers;
        PairQueue queue(config.strategy);
        ReduceOptions popts = ropts;
        popts.euclidean = euclid;
        // Completion pass (and the ZZ/n single pass, where the flag is
        // inert): keep leading chains exact but shrink frozen tails.
        popts.euclidean_tail = !euclid;

        auto append = [&](const Poly& h) {
            Poly n = h.normalized();
            track_bits(stats, n);
            if (is_unit_constant(n)) {
                unit_found = true;
                return;
            }
            S.push_back(std::move(n));
            active.push_back(1);
            const size_t idx = S.size() - 1;
            queue.update(S, static_cast<int>(idx), active);
            if (!local) {
                const Term& lt = S[idx].leading_term();
                for (size_t j = 0; j < idx; ++j)
                    if (active[j] &&
                        term_divides(lt, S[j].leading_term(), ctx->ring))
                        active[j] = 0;
            }
            reducers.clear();
            for (size_t j = 0; j < S.size(); ++j)
                if (active[j]) reducers.push_back(S[j]);
        };

        for (const Poly& g : gens) {
            if (g.is_zero()) continue;
            append(g);
            if (unit_found) break;
        }
        if (S.empty() && !unit_found)
            throw Error("std: all generators are zero");

        while (!unit_found && !queue.empty()) {
            check_deadline(config.deadline);
            if (++stats.pairs_selected >
                static_cast<unsigned long>(config.pair_cap))
                throw CapExceeded("std: pair cap exceeded");
            CriticalPair p = queue.select();
            Poly h = materialize(p, S);
            if (h.is_zero()) continue;  // e.g. epoly over an integral domain
            track_bits(stats, h);
            // Gcd pairs carry the coefficient-gcd layer of the basis; full
            // remainder reduction folds those elements away, so they only
            // get the head-frozen (tail) variant.
            ReduceOptions cur = popts;
            if (p.kind == PairKind::Gcd && cur.euclidean) {
                cur.euclidean = false;
                cur.euclidean_tail = true;
            }
            h = local ? reduce_mora(h, S, cur).nf
                      : reduce_global(h, reducers, cur);
            if (h.is_zero()) {
                ++stats.zero_reductions;
                continue;
            }
            append(h);
        }

        stats.pairs_created += queue.created();
        std::vector<Poly> kept;
        for (size_t j = 0; j < S.size(); ++j)
            if (active[j]) kept.push_back(std::move(S[j]));
        return kept;
    };

    const bool euclid = !local && ctx->ring.kind() == RingKind::Integers;
    std::vector<Poly> S = run_pass(generators, euclid);
    if (euclid && !unit_found) S = run_pass(S, false);

    if (unit_found) {
        S.clear();
        S.push_back(Poly::constant(ctx, ctx->ring.one()));
    }

    if (config.interreduce_output) S = interreduce(std::move(S));
    if (config.tail_reduce_output && ctx->ord.is_global()) {
        ReduceOptions topts = ropts;
        topts.tail_reduce = true;
        std::vector<Poly> out;
        out.reserve(S.size());
        for (size_t i = 0; i < S.size(); ++i) {
            // Tail-reduce each element against the others.
            std::vector<Poly> others;
            for (size_t j = 0; j < S.size(); ++j)
                if (j != i) others.push_back(S[j]);
            Poly t = S[i].tail();
            Poly r = t.is_zero() ? t : reduce_global(t, others, topts);
            out.push_back(add(Poly::from_term(ctx, S[i].leading_coeff(),
                                              S[i].leading_monomial()),
                              r).normalized());
        }
        S = std::move(out);
    }
    for (const Poly& g : S) track_bits(stats, g);
    stats.basis_size = S.size();
    stats.wall_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    return S;
}

std::vector<Poly> std_basis(const std::vector<Poly>& generators,
                            const StdConfig& config) {
    StdStats stats;
    return std_basis_with_stats(generators, config, stats);
}

}  // namespace zgb
