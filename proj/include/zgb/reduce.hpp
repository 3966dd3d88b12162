#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <vector>

#include "zgb/pairs.hpp"
#include "zgb/poly.hpp"

namespace zgb {

using Deadline = std::chrono::steady_clock::time_point;

struct ReduceOptions {
    bool tail_reduce = false;
    // Global orderings over ZZ only: when no leading coefficient divides
    // exactly, reduce it with symmetric remainder against the smallest
    // applicable one. Engine-internal speedup; the strong (exact-division)
    // property of the final basis is certified separately by the verifier.
    bool euclidean = false;
    // Like `euclidean`, but only once the first irreducible head has been
    // frozen (needs tail_reduce). The leading-term chain stays exact, so a
    // zero result is a genuine exact-division certificate and coefficient-gcd
    // elements survive, while later heads are still kept small.
    bool euclidean_tail = false;
    long iteration_cap = 100000;  // Mora step cap
    bool gcd_augment = true;      // debug switch for local orderings
    // Mora only: keep the input's own augmented T-copy out of reducer
    // selection. This matches the worked reduction traces; membership tests
    // turn it off, where self-reduction is sound and far cheaper.
    bool exclude_input_copy = true;
    std::optional<Deadline> deadline;
};

// Does lt(g) divide lt(h) as a TERM (monomial and coefficient, ring sense)?
bool term_divides(const Term& g, const Term& h, const Ring& R);

// Strong reduction for global orderings: h -> h - (lt(h)/lt(g))*g while a
// term divisor exists. Weak by default; tail_reduce makes every term
// irreducible. Throws on a local ordering.
Poly reduce_global(const Poly& f, std::span<const Poly> G,
                   const ReduceOptions& opts = {});

struct MoraResult {
    Poly nf;
    std::vector<Poly> augmented;  // elements appended to T during the run
};

// Mora-style weak normal form for local orderings over ZZ / ZZ/n:
// minimal-ecart reducer selection; on ecart(g) > ecart(h) the reducer set
// grows by h and the non-redundant gcd-polynomials gp(h, t), t in T.
MoraResult reduce_mora(const Poly& f, std::span<const Poly> G,
                       const ReduceOptions& opts = {});

// Ordering-dispatching normal form (weak).
Poly reduce(const Poly& f, std::span<const Poly> G,
            const ReduceOptions& opts = {});

// Drop elements whose leading term is term-divisible by another retained
// element's; survivors sign-normalized. Leading-term ideal unchanged.
std::vector<Poly> interreduce(std::vector<Poly> S);

void check_deadline(const std::optional<Deadline>& d);

}  // namespace zgb
