#include "doctest.h"
#include "helpers.hpp"

using namespace zgbtest;

TEST_CASE("ext_gcd small values") {
    auto r = ext_gcd(2, 3);
    CHECK(r.g == 1);
    CHECK(r.s == -1);
    CHECK(r.t == 1);

    r = ext_gcd(4, 6);
    CHECK(r.g == 2);
    CHECK(r.s == -1);
    CHECK(r.t == 1);

    r = ext_gcd(3, 4);
    CHECK(r.g == 1);
    CHECK(r.s == -1);
    CHECK(r.t == 1);

    r = ext_gcd(0, 0);
    CHECK(r.g == 0);
    CHECK(r.s == 0);
    CHECK(r.t == 0);

    r = ext_gcd(0, 5);
    CHECK(r.g == 5);
    CHECK(r.g == r.s * 0 + r.t * 5);
}

TEST_CASE("ext_gcd against brute-force oracle for (42, 66)") {
    // smallest |s| solving 42 s + 66 t = 6, found by exhaustive search
    Int best_s, best_t;
    bool found = false;
    for (long s = -100; s <= 100; ++s) {
        long rem = 6 - 42 * s;
        if (rem % 66) continue;
        if (!found || abs(Int(s)) < abs(best_s)) {
            best_s = s;
            best_t = rem / 66;
            found = true;
        }
    }
    auto r = ext_gcd(42, 66);
    CHECK(r.g == 6);
    CHECK(r.g == r.s * 42 + r.t * 66);
    CHECK(abs(r.s) == abs(best_s));
}

TEST_CASE("ext_gcd random 256-bit property") {
    gmp_randclass rnd(gmp_randinit_default);
    rnd.seed(12345);
    for (int i = 0; i < 200; ++i) {
        Int a = rnd.get_z_bits(256), b = rnd.get_z_bits(256);
        if (i % 3 == 0) a = -a;
        if (i % 5 == 0) b = -b;
        auto r = ext_gcd(a, b);
        Int g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        CHECK(r.g == g);
        CHECK(r.g == r.s * a + r.t * b);
        if (g != 0 && a % b != 0 && b % a != 0) {
            CHECK(abs(r.s) <= abs(b / g));
            CHECK(abs(r.t) <= abs(a / g));
        }
    }
}

TEST_CASE("ring ZZ basics") {
    Ring R = Ring::integers();
    CHECK(!R.is_field());
    CHECK(!R.has_zero_divisors());
    CHECK(R.divides(Coeff(2), Coeff(-4)));
    CHECK(!R.divides(Coeff(2), Coeff(3)));
    CHECK(R.quotient(Coeff(-4), Coeff(2)) == Coeff(-2));
    CHECK(R.is_unit(Coeff(-1)));
    CHECK(!R.is_unit(Coeff(2)));
}

TEST_CASE("ring ZZ/12 basics") {
    Ring R = Ring::integers_mod(12);
    CHECK(R.has_zero_divisors());
    CHECK(!Ring::integers_mod(7).has_zero_divisors());
    CHECK(R.canon(Coeff(-1)) == Coeff(11));
    CHECK(R.canon(Coeff(25)) == Coeff(1));
    CHECK(R.is_unit(R.canon(Coeff(5))));
    CHECK(!R.is_unit(R.canon(Coeff(4))));
    // divisibility: b in <a> mod 12 iff gcd(a,12) | b
    CHECK(R.divides(Coeff(4), Coeff(8)));
    CHECK(R.divides(Coeff(8), Coeff(4)));  // gcd(8,12)=4
    CHECK(!R.divides(Coeff(4), Coeff(2)));
    Coeff q = R.quotient(Coeff(8), Coeff(4));
    CHECK(R.canon(q * 4) == Coeff(8));
}

TEST_CASE("ZZ/n divides/quotient brute force") {
    for (long n : {4L, 12L, 30L}) {
        Ring R = Ring::integers_mod(n);
        for (long a = 1; a < n; ++a) {
            for (long b = 0; b < n; ++b) {
                bool expect = false;
                for (long q = 0; q < n; ++q)
                    if ((q * a) % n == b) expect = true;
                CHECK(R.divides(Coeff(a), Coeff(b)) == expect);
                if (expect && b != 0) {
                    Coeff q = R.quotient(Coeff(b), Coeff(a));
                    CHECK(R.canon(q * a) == Coeff(b));
                }
            }
        }
    }
}

TEST_CASE("ideal_gen_pair over ZZ") {
    Ring R = Ring::integers();
    auto p = ideal_gen_pair(R, Coeff(2), Coeff(3));
    CHECK(!p.redundant);
    CHECK(p.c == Coeff(1));
    CHECK(p.df * 2 + p.dg * 3 == p.c);

    p = ideal_gen_pair(R, Coeff(2), Coeff(4));
    CHECK(p.redundant);
    CHECK(p.c == Coeff(2));
    CHECK(p.df * 2 + p.dg * 4 == p.c);

    p = ideal_gen_pair(R, Coeff(4), Coeff(2));
    CHECK(p.redundant);
    CHECK(p.c == Coeff(2));
    CHECK(p.df * 4 + p.dg * 2 == p.c);

    CHECK_THROWS_AS(ideal_gen_pair(Ring::rationals(), Coeff(1), Coeff(2)),
                    FieldRingError);
}

namespace {

// <c> == <cf, cg> in Z/n, by enumerating both ideals
bool same_ideal_mod(long n, long c, long cf, long cg) {
    std::vector<bool> gen(static_cast<size_t>(n), false), one(gen);
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            gen[static_cast<size_t>((a * cf + b * cg) % n)] = true;
    for (long a = 0; a < n; ++a) one[static_cast<size_t>((a * c) % n)] = true;
    return gen == one;
}

}  // namespace

TEST_CASE("ideal_gen_pair over ZZ/n brute force") {
    for (long n : {12L, 9L, 16L}) {
        Ring R = Ring::integers_mod(n);
        for (long cf = 1; cf < n; ++cf) {
            for (long cg = 1; cg < n; ++cg) {
                auto p = ideal_gen_pair(R, Coeff(cf), Coeff(cg));
                CHECK(R.canon(p.df * cf + p.dg * cg) == p.c);
                CHECK(same_ideal_mod(n, p.c.get_num().get_si(), cf, cg));
                bool red = R.divides(Coeff(cf), Coeff(cg)) ||
                           R.divides(Coeff(cg), Coeff(cf));
                CHECK(p.redundant == red);
            }
        }
    }
}

TEST_CASE("annihilator brute force mod n") {
    for (long n : {12L, 8L, 30L}) {
        Ring R = Ring::integers_mod(n);
        for (long c = 1; c < n; ++c) {
            Coeff a = annihilator(R, Coeff(c));
            long av = a.get_num().get_si();
            CHECK((av * c) % n == 0);
            // every annihilating x is a multiple of a mod n
            for (long x = 1; x < n; ++x) {
                if ((x * c) % n != 0) continue;
                bool mult = false;
                for (long k = 0; k < n; ++k)
                    if ((k * av) % n == x) mult = true;
                CHECK(mult);
            }
        }
    }
    CHECK(annihilator(Ring::integers(), Coeff(6)) == Coeff(0));
}

TEST_CASE("coeff_lcm") {
    Ring Z = Ring::integers();
    CHECK(coeff_lcm(Z, Coeff(4), Coeff(6)) == Coeff(12));
    CHECK(coeff_lcm(Z, Coeff(-4), Coeff(6)) == Coeff(12));
    CHECK(coeff_lcm(Ring::rationals(), Coeff(3), Coeff(5)) == Coeff(1));
    Ring R = Ring::integers_mod(12);
    CHECK(coeff_lcm(R, Coeff(2), Coeff(3)) == Coeff(6));
    CHECK(coeff_lcm(R, Coeff(4), Coeff(6)) == R.canon(Coeff(12)));
}
