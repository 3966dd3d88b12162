#pragma once

#include <span>
#include <vector>

#include "zgb/reduce.hpp"

namespace zgb {

struct PairFailure {
    PairKind kind;
    int i, j;
    Poly remainder;
};

struct VerificationReport {
    bool passed = true;
    std::vector<PairFailure> failures;
    long checked_pair_count = 0;
};

// Conservative strong-basis check: reduces every s-, non-redundant gcd-,
// and extended pair polynomial to normal form against S; passes iff all
// reach zero. Failures are reported, never thrown.
VerificationReport is_strong_basis(std::span<const Poly> S,
                                   const ReduceOptions& opts = {});

// Mutual zero-reduction: same ideal and same leading-term closure when
// both arguments are strong bases.
bool equivalent(std::span<const Poly> S1, std::span<const Poly> S2,
                const ReduceOptions& opts = {});

// Membership by strong division: reduce(f, S) == 0.
bool in_ideal(const Poly& f, std::span<const Poly> S,
              const ReduceOptions& opts = {});

}  // namespace zgb
