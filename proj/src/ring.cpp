#include "zgb/ring.hpp"

namespace zgb {

ExtGcd ext_gcd(const Int& a, const Int& b) {
    if (sgn(a) == 0 && sgn(b) == 0) return {0, 0, 0};
    ExtGcd r;
    mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(),
               a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Ring Ring::integers() { return Ring(RingKind::Integers, 0); }

Ring Ring::integers_mod(Int n) {
    if (n < 2) throw Error("ZZ/n requires n >= 2");
    return Ring(RingKind::IntegersMod, std::move(n));
}

Ring Ring::rationals() { return Ring(RingKind::Rationals, 0); }

bool Ring::has_zero_divisors() const {
    if (kind_ != RingKind::IntegersMod) return false;
    return mpz_probab_prime_p(modulus_.get_mpz_t(), 30) == 0;
}

Coeff Ring::canon(Coeff c) const {
    switch (kind_) {
        case RingKind::Integers:
            return c;
        case RingKind::IntegersMod: {
            Int v = c.get_num();
            mpz_mod(v.get_mpz_t(), v.get_mpz_t(), modulus_.get_mpz_t());
            return Coeff(std::move(v));
        }
        case RingKind::Rationals:
            c.canonicalize();
            return c;
    }
    return c;
}

Coeff Ring::add(const Coeff& a, const Coeff& b) const {
    if (kind_ == RingKind::Rationals) return a + b;
    Coeff r(a.get_num() + b.get_num());
    return kind_ == RingKind::IntegersMod ? canon(std::move(r)) : r;
}

Coeff Ring::sub(const Coeff& a, const Coeff& b) const {
    if (kind_ == RingKind::Rationals) return a - b;
    Coeff r(a.get_num() - b.get_num());
    return kind_ == RingKind::IntegersMod ? canon(std::move(r)) : r;
}

Coeff Ring::mul(const Coeff& a, const Coeff& b) const {
    if (kind_ == RingKind::Rationals) return a * b;
    Coeff r(a.get_num() * b.get_num());
    return kind_ == RingKind::IntegersMod ? canon(std::move(r)) : r;
}

Coeff Ring::neg(const Coeff& a) const {
    if (kind_ == RingKind::IntegersMod) return canon(Coeff(-a.get_num()));
    return -a;
}

bool Ring::is_unit(const Coeff& a) const {
    switch (kind_) {
        case RingKind::Integers:
            return a == 1 || a == -1;
        case RingKind::IntegersMod: {
            Int g = gcd(a.get_num(), modulus_);
            return g == 1;
        }
        case RingKind::Rationals:
            return sgn(a) != 0;
    }
    return false;
}

bool Ring::divides(const Coeff& a, const Coeff& b) const {
    switch (kind_) {
        case RingKind::Integers:
            if (sgn(a) == 0) return sgn(b) == 0;
            return mpz_divisible_p(b.get_num().get_mpz_t(),
                                   a.get_num().get_mpz_t()) != 0;
        case RingKind::IntegersMod: {
            // b in <a> mod n  <=>  gcd(a, n) | b
            Int g = gcd(a.get_num(), modulus_);
            return mpz_divisible_p(b.get_num().get_mpz_t(), g.get_mpz_t()) != 0;
        }
        case RingKind::Rationals:
            return sgn(a) != 0 || sgn(b) == 0;
    }
    return false;
}

Coeff Ring::quotient(const Coeff& b, const Coeff& a) const {
    switch (kind_) {
        case RingKind::Integers: {
            Int q;
            mpz_divexact(q.get_mpz_t(), b.get_num().get_mpz_t(),
                         a.get_num().get_mpz_t());
            return Coeff(std::move(q));
        }
        case RingKind::IntegersMod: {
            // smallest nonnegative q with q*a == b (mod n):
            // d = gcd(a,n); q = (b/d) * inv(a/d) mod (n/d)
            Int d = gcd(a.get_num(), modulus_);
            Int n1 = modulus_ / d;
            if (n1 == 1) throw Error("quotient: zero divisor argument");
            Int a1 = a.get_num() / d;
            Int b1 = b.get_num() / d;
            Int inv;
            if (mpz_invert(inv.get_mpz_t(), a1.get_mpz_t(), n1.get_mpz_t()) == 0)
                throw Error("quotient: no inverse (broken divisibility)");
            Int q = b1 * inv;
            mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n1.get_mpz_t());
            return Coeff(std::move(q));
        }
        case RingKind::Rationals:
            return b / a;
    }
    throw Error("quotient: bad ring");
}

long Ring::bit_length(const Coeff& a) {
    if (sgn(a) == 0) return 0;
    long nb = static_cast<long>(mpz_sizeinbase(a.get_num().get_mpz_t(), 2));
    long db = static_cast<long>(mpz_sizeinbase(a.get_den().get_mpz_t(), 2));
    return nb > db ? nb : db;
}

std::string Ring::to_string() const {
    switch (kind_) {
        case RingKind::Integers: return "ZZ";
        case RingKind::IntegersMod: return "ZZ/" + modulus_.get_str();
        case RingKind::Rationals: return "QQ";
    }
    return "?";
}

bool Ring::operator==(const Ring& o) const {
    return kind_ == o.kind_ && modulus_ == o.modulus_;
}

IdealGenPair ideal_gen_pair(const Ring& R, const Coeff& cf, const Coeff& cg) {
    if (R.is_field())
        throw FieldRingError("gcd-pairs are undefined over a field");
    if (R.is_zero(cf) || R.is_zero(cg))
        throw Error("ideal_gen_pair: zero argument");

    if (R.divides(cf, cg))
        return {cf, R.one(), R.zero(), true};
    if (R.divides(cg, cf))
        return {cg, R.zero(), R.one(), true};

    const Int& a = cf.get_num();
    const Int& b = cg.get_num();
    ExtGcd e = ext_gcd(a, b);
    if (R.kind() == RingKind::Integers)
        return {Coeff(e.g), Coeff(e.s), Coeff(e.t), false};

    // ZZ/n: <cf,cg> = <gcd(cf,cg,n)>; fold the modulus into the witness.
    ExtGcd e2 = ext_gcd(e.g, R.modulus());
    return {R.canon(Coeff(e2.g)), R.canon(Coeff(e2.s * e.s)),
            R.canon(Coeff(e2.s * e.t)), false};
}

Coeff annihilator(const Ring& R, const Coeff& c) {
    if (R.is_zero(c)) throw Error("annihilator: zero argument");
    if (R.kind() != RingKind::IntegersMod) return R.zero();
    Int g = gcd(c.get_num(), R.modulus());
    return R.canon(Coeff(R.modulus() / g));
}

Coeff coeff_lcm(const Ring& R, const Coeff& a, const Coeff& b) {
    if (R.is_zero(a) || R.is_zero(b)) throw Error("coeff_lcm: zero argument");
    if (R.is_field()) return R.one();
    Int l = lcm(a.get_num(), b.get_num());
    return R.canon(Coeff(std::move(l)));
}

}  // namespace zgb
