#pragma once

#include <optional>
#include <span>
#include <vector>

#include "zgb/engine.hpp"

namespace zgb {

// Explicit combination expressing a term of the ideal in terms of the
// input generators, exact over ZZ after denominator clearing.
struct Certificate {
    Poly target;                 // c * x^m over ZZ
    std::vector<Poly> cofactors; // ZZ polys with target = sum cof[i]*f_i
    Int denominator_lcm;

    bool verify(std::span<const Poly> generators) const;
};

struct QBasisWithCofactors {
    CtxPtr qctx;
    std::vector<Poly> basis;                  // reduced Groebner basis over QQ
    std::vector<std::vector<Poly>> cofactors; // per basis element, over QQ
};

// Field Buchberger over QQ with transformation-matrix tracking: every
// basis element g comes with cofactors q_i such that g = sum q_i * f_i.
// Stops early once a constant enters the basis (the basis is then {1}).
QBasisWithCofactors std_q_with_cofactors(std::span<const Poly> generators,
                                         const StdConfig& config = {});

struct PrecheckResult {
    std::vector<Poly> generators;           // possibly augmented
    std::optional<Certificate> certificate; // present iff augmented
};

// preIntegerCheck: if the QQ basis is {1}, adjoin a nonzero integer of the
// ideal; else if some basis element is a single monomial, adjoin an
// integer multiple of it; else return the generators unchanged.
// Pre: ring ZZ, global ordering.
PrecheckResult pre_integer_check(std::span<const Poly> generators,
                                 const StdConfig& config = {});

}  // namespace zgb
