#pragma once

#include <gmpxx.h>

#include <string>

#include "zgb/error.hpp"

namespace zgb {

using Int = mpz_class;

// Coefficient value. For ZZ and ZZ/n the denominator is always 1 and all
// arithmetic runs on the numerator; QQ uses full rational arithmetic with
// canonical (reduced, positive-denominator) representation.
using Coeff = mpq_class;

enum class RingKind { Integers, IntegersMod, Rationals };

struct ExtGcd {
    Int g, s, t;  // g = gcd(a,b) >= 0, g = s*a + t*b
};

// Extended Euclid. ext_gcd(0,0) = (0,0,0); cofactors are the minimized
// pair (|s| <= |b/g|, |t| <= |a/g| where defined).
ExtGcd ext_gcd(const Int& a, const Int& b);

struct IdealGenPair {
    Coeff c, df, dg;  // <cf,cg> = <c>, c = df*cf + dg*cg
    bool redundant;   // cf | cg or cg | cf in the ring
};

class Ring {
public:
    static Ring integers();
    static Ring integers_mod(Int n);  // n >= 2, primality not required
    static Ring rationals();

    RingKind kind() const { return kind_; }
    const Int& modulus() const { return modulus_; }
    bool is_field() const { return kind_ == RingKind::Rationals; }
    bool has_zero_divisors() const;  // ZZ/n with n composite

    Coeff zero() const { return Coeff(0); }
    Coeff one() const { return Coeff(1); }

    // Canonical form: ZZ/n representative in [0,n); QQ reduced fraction.
    Coeff canon(Coeff c) const;
    Coeff from_int(Int v) const { return canon(Coeff(std::move(v))); }

    Coeff add(const Coeff& a, const Coeff& b) const;
    Coeff sub(const Coeff& a, const Coeff& b) const;
    Coeff mul(const Coeff& a, const Coeff& b) const;
    Coeff neg(const Coeff& a) const;

    bool is_zero(const Coeff& a) const { return sgn(a) == 0; }
    bool is_unit(const Coeff& a) const;

    // Term-divisibility of coefficients: a | b in the ring sense
    // (ZZ: plain divisibility; ZZ/n: b in <a> mod n; QQ: always for a != 0).
    bool divides(const Coeff& a, const Coeff& b) const;
    // Canonical q with q*a = b (pre: divides(a, b), a != 0).
    Coeff quotient(const Coeff& b, const Coeff& a) const;

    // Bit length of the largest magnitude involved (stats instrumentation).
    static long bit_length(const Coeff& a);

    std::string to_string() const;
    bool operator==(const Ring& o) const;

private:
    Ring(RingKind k, Int m) : kind_(k), modulus_(std::move(m)) {}
    RingKind kind_;
    Int modulus_;  // 0 unless IntegersMod
};

// <cf,cg> = <c> with Bezout witness; rejects QQ with FieldRingError.
// Pre: cf, cg nonzero.
IdealGenPair ideal_gen_pair(const Ring& R, const Coeff& cf, const Coeff& cg);

// Generator of Ann(c) = {x : x*c = 0}. 0 over ZZ and QQ; n/gcd(n,c) mod n
// over ZZ/n. Pre: c != 0.
Coeff annihilator(const Ring& R, const Coeff& c);

// Positive lcm over ZZ; lcm of canonical representatives mod n over ZZ/n;
// 1 over QQ (field convention). Pre: a, b nonzero.
Coeff coeff_lcm(const Ring& R, const Coeff& a, const Coeff& b);

}  // namespace zgb
