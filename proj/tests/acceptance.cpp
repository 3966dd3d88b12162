// Acceptance suite: one criterion per numeric argument (default: all).
// Prints exactly one PASS/FAIL line per criterion on stdout; progress
// details go to stderr. Exit 0 iff every requested criterion passed.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "zgb/corpus.hpp"
#include "zgb/engine.hpp"
#include "zgb/io.hpp"
#include "zgb/precheck.hpp"
#include "zgb/verify.hpp"

using namespace zgb;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Deadline after_seconds(double s) {
    return Clock::now() + std::chrono::milliseconds(static_cast<long>(s * 1000));
}

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

// 1. flagship global golden
Check criterion1() {
    Check c;
    auto t0 = Clock::now();
    auto src = corpus_load("ex33");
    auto basis = std_basis(src.generators);
    c.require(is_strong_basis(basis).passed, "is_strong_basis failed");
    c.require(equivalent(basis, *src.expected), "not equivalent to golden");
    std::vector<std::string> lts;
    for (const auto& g : basis) {
        std::ostringstream os;
        os << g.leading_coeff().get_num().get_str();
        const auto& m = g.leading_monomial();
        for (int i = 0; i < m.nvars(); ++i)
            for (unsigned e = 0; e < m.exp(i); ++e)
                os << "*" << src.ctx->vars[static_cast<size_t>(i)];
        lts.push_back(os.str());
    }
    std::sort(lts.begin(), lts.end());
    bool lt_ok = lts == std::vector<std::string>{"1*x", "1*y", "7"};
    c.require(lt_ok, "leading terms not {7, x, y}");
    c.require(ms_since(t0) < 1000, "exceeded 1s budget");
    return c;
}

// 2. preIntegerCheck certificate on the flagship ideal
Check criterion2() {
    Check c;
    auto t0 = Clock::now();
    auto src = corpus_load("ex33");
    auto pr = pre_integer_check(src.generators);
    c.require(pr.certificate.has_value(), "no certificate");
    if (pr.certificate) {
        const auto& cert = *pr.certificate;
        c.require(cert.target.is_constant(), "target not a constant");
        if (cert.target.is_constant()) {
            Int v = cert.target.leading_coeff().get_num();
            c.require(v != 0, "constant is zero");
            c.require(v % 7 == 0, "constant not a multiple of 7");
        }
        c.require(cert.verify(src.generators), "combination does not expand");
    }
    c.require(ms_since(t0) < 1000, "exceeded 1s budget");
    return c;
}

// 3. 70-generator ideal with precheck, 30-minute budget
Check criterion3() {
    Check c;
    auto t0 = Clock::now();
    auto src = corpus_load("f70");
    StdConfig cfg;
    cfg.deadline = after_seconds(1800);
    auto pr = pre_integer_check(src.generators, cfg);
    c.require(pr.certificate.has_value(), "precheck found nothing");
    if (pr.certificate) {
        const auto& cert = *pr.certificate;
        c.require(cert.target.is_constant(), "precheck target not constant");
        if (cert.target.is_constant()) {
            Int v = cert.target.leading_coeff().get_num();
            c.require(v != 0 && v % 18 == 0,
                      "constant not a nonzero multiple of 18 (got " +
                          v.get_str() + ")");
        }
        c.require(cert.verify(src.generators), "certificate does not expand");
    }
    std::cerr << "  [3] precheck done at " << ms_since(t0) / 1000 << "s\n";
    auto basis = std_basis(pr.generators, cfg);
    std::cerr << "  [3] basis of size " << basis.size() << " at "
              << ms_since(t0) / 1000 << "s\n";
    c.require(is_strong_basis(basis).passed, "is_strong_basis failed");
    c.require(equivalent(basis, *src.expected), "not equivalent to golden S");
    c.require(ms_since(t0) < 1800 * 1000.0, "exceeded 30min budget");
    return c;
}

// 4. local golden plus the non-termination reproduction
Check criterion4() {
    Check c;
    auto t0 = Clock::now();
    auto src = corpus_load("ex42");
    auto basis = std_basis(src.generators);
    c.require(equivalent(basis, *src.expected), "not equivalent to golden");

    const std::vector<Poly>& golden = *src.expected;
    Poly f = parse_poly(src.ctx, "4+x");
    MoraResult r = reduce_mora(f, golden);
    c.require(r.nf.is_zero(), "reduce_mora(4+x) not zero");
    Poly logged = parse_poly(src.ctx, "x+2*y+3*x^2").normalized();
    bool seen = false;
    for (const auto& a : r.augmented)
        if (a.normalized().equals(logged)) seen = true;
    c.require(seen, "augmentation log missing x+2y+3x^2");

    ReduceOptions noaug;
    noaug.gcd_augment = false;
    noaug.iteration_cap = 10000;  // diverges at any cap; keep the 1s budget
    bool capped = false;
    try {
        reduce_mora(f, golden, noaug);
    } catch (const CapExceeded&) {
        capped = true;
    }
    c.require(capped, "no-gcd-augment reduction terminated unexpectedly");
    c.require(ms_since(t0) < 1000, "exceeded 1s budget");
    return c;
}

// 5. strategy cross-validation on the 15 appendix ideals
Check criterion5() {
    Check c;
    std::vector<std::string> names;
    for (int i = 1; i <= 10; ++i) names.push_back("A" + std::to_string(i));
    for (int i = 1; i <= 5; ++i) names.push_back("B" + std::to_string(i));
    for (const auto& name : names) {
        auto src = corpus_load(name);
        Strategy favored =
            name[0] == 'A' ? Strategy::ALL : Strategy::JUST;
        Strategy other =
            favored == Strategy::ALL ? Strategy::JUST : Strategy::ALL;

        auto run = [&](Strategy s, std::vector<Poly>& out) {
            StdConfig cfg;
            cfg.strategy = s;
            cfg.deadline = after_seconds(600);
            auto t0 = Clock::now();
            try {
                out = std_basis(src.generators, cfg);
                std::cerr << "  [5] " << name << " "
                          << (s == Strategy::ALL ? "all" : "just") << " ok in "
                          << ms_since(t0) / 1000 << "s, size " << out.size()
                          << "\n";
                return true;
            } catch (const TimedOut&) {
                std::cerr << "  [5] " << name << " "
                          << (s == Strategy::ALL ? "all" : "just")
                          << " timed out\n";
                return false;
            }
        };

        std::vector<Poly> favored_basis, other_basis;
        bool favored_done = run(favored, favored_basis);
        c.require(favored_done, name + ": favored strategy timed out");
        if (favored_done) {
            ReduceOptions vopts;
            vopts.deadline = after_seconds(600);
            c.require(is_strong_basis(favored_basis, vopts).passed,
                      name + ": verification failed");
        }
        bool other_done = run(other, other_basis);
        if (favored_done && other_done) {
            c.require(equivalent(favored_basis, other_basis),
                      name + ": ALL/JUST outputs differ");
        }
    }
    return c;
}

// 6. Example B:1 over ZZ/10^200 within 5 minutes
Check criterion6() {
    Check c;
    auto t0 = Clock::now();
    auto src = corpus_load("B1_mod10e200");
    StdConfig cfg;
    cfg.deadline = after_seconds(300);
    try {
        auto basis = std_basis(src.generators, cfg);
        std::cerr << "  [6] basis size " << basis.size() << " in "
                  << ms_since(t0) / 1000 << "s\n";
        ReduceOptions vopts;
        vopts.deadline = after_seconds(300);
        c.require(is_strong_basis(basis, vopts).passed,
                  "verification failed");
    } catch (const TimedOut&) {
        c.require(false, "timed out");
    }
    c.require(ms_since(t0) < 300 * 1000.0, "exceeded 5min budget");
    return c;
}

// 7. randomized property suite
Check criterion7() {
    Check c;
    auto t0 = Clock::now();
    std::mt19937_64 rng(0xC0FFEE);
    std::uniform_int_distribution<int> ngens(1, 3), nterms(1, 5);
    std::uniform_int_distribution<long> coeff(-100, 100);
    std::uniform_int_distribution<unsigned> expo(0, 4);

    auto random_poly = [&](const CtxPtr& ctx) {
        std::vector<Term> terms;
        int n = nterms(rng);
        for (int t = 0; t < n; ++t) {
            Monomial m(ctx->nvars());
            for (int i = 0; i < ctx->nvars(); ++i) {
                unsigned e = expo(rng);
                if (m.degree() + e > 4) e = 4 - m.degree();
                m.set_exp(i, e);
            }
            long cv = coeff(rng);
            if (cv == 0) cv = 1;
            terms.push_back({ctx->ring.canon(Coeff(cv)), m});
        }
        return Poly(ctx, std::move(terms));
    };

    std::vector<CtxPtr> rings = {
        Context::make(Ring::integers(), OrdKind::DegRevLex, {"x", "y", "z"}),
        Context::make(Ring::integers_mod(12), OrdKind::DegRevLex,
                      {"x", "y", "z"})};
    int instances = 0;
    for (const auto& ctx : rings) {
        for (int it = 0; it < 100; ++it) {
            std::vector<Poly> gens;
            int n = ngens(rng);
            for (int i = 0; i < n; ++i) {
                Poly f = random_poly(ctx);
                if (!f.is_zero()) gens.push_back(f);
            }
            if (gens.empty()) continue;
            ++instances;
            std::string tag = (ctx->ring.kind() == RingKind::Integers
                                   ? "ZZ#"
                                   : "ZZ/12#") +
                              std::to_string(it);

            StdConfig all_cfg, just_cfg;
            all_cfg.strategy = Strategy::ALL;
            just_cfg.strategy = Strategy::JUST;

            std::vector<Poly> ball, bjust;
            bool all_done = false, just_done = false;
            try {
                // each strategy gets its own 60 s window
                all_cfg.deadline = after_seconds(60);
                ball = std_basis(gens, all_cfg);
                all_done = true;
            } catch (const TimedOut&) {
            }
            try {
                just_cfg.deadline = after_seconds(60);
                bjust = std_basis(gens, just_cfg);
                just_done = true;
            } catch (const TimedOut&) {
            }
            if (all_done) {
                // (a) strong basis; (b) generators vanish
                c.require(is_strong_basis(ball).passed,
                          tag + ": is_strong_basis failed");
                for (const auto& f : gens)
                    c.require(reduce(f, ball).is_zero(),
                              tag + ": generator does not reduce to 0");
                // (c) pair invariants on all basis pairs
                for (size_t i = 0; i < ball.size(); ++i) {
                    for (size_t j = i + 1; j < ball.size(); ++j) {
                        const Poly &f = ball[i], &g = ball[j];
                        Monomial L = Monomial::lcm(f.leading_monomial(),
                                                   g.leading_monomial());
                        Poly sp = spoly(f, g);
                        c.require(sp.is_zero() ||
                                      compare(sp.leading_monomial(), L,
                                              ctx->ord) < 0,
                                  tag + ": spoly leading term not cancelled");
                        GPoly gp = gpoly(f, g);
                        if (!gp.redundant) {
                            c.require(!gp.p.is_zero() &&
                                          gp.p.leading_monomial() == L,
                                      tag + ": gpoly lm not the lcm");
                            if (!gp.p.is_zero()) {
                                IdealGenPair ig = ideal_gen_pair(
                                    ctx->ring, f.leading_coeff(),
                                    g.leading_coeff());
                                c.require(gp.p.leading_coeff() == ig.c,
                                          tag + ": gpoly lc not the ideal gcd");
                            }
                        }
                    }
                }
            }
            // (e) cross-strategy equivalence
            if (all_done && just_done)
                c.require(equivalent(ball, bjust),
                          tag + ": ALL/JUST outputs differ");
            if (!c.ok) return c;  // fail fast with the first diagnostic
        }
    }
    c.require(instances >= 100, "fewer than 100 instances exercised");
    // (d) Bezout ambiguity: alternate cofactor gpolys differ by the spoly
    auto zctx = rings[0];
    for (int it = 0; it < 100; ++it) {
        Poly f = random_poly(zctx), g = random_poly(zctx);
        if (f.is_zero() || g.is_zero()) continue;
        Int cf = f.leading_coeff().get_num(), cg = g.leading_coeff().get_num();
        auto e = ext_gcd(cf, cg);
        Monomial L =
            Monomial::lcm(f.leading_monomial(), g.leading_monomial());
        Monomial af = L.quotient(f.leading_monomial());
        Monomial ag = L.quotient(g.leading_monomial());
        auto combine = [&](const Int& s, const Int& t) {
            Poly a = mul_term(f, {Coeff(s), af});
            return add_scaled(a, Coeff(t), ag, g);
        };
        Poly gp1 = combine(e.s, e.t);
        Poly gp2 = combine(e.s + cg / e.g, e.t - cf / e.g);
        Poly diff = add_scaled(gp2, Coeff(-1), Monomial::one(3), gp1);
        Poly sp = spoly(f, g);
        c.require(diff.equals(sp) || diff.equals(sp.neg()) || diff.is_zero(),
                  "Bezout ambiguity not an spoly multiple");
    }
    double total = ms_since(t0);
    std::cerr << "  [7] " << instances << " instances in " << total / 1000
              << "s\n";
    c.require(total < 600 * 1000.0, "exceeded 10min budget");
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));
    if (wanted.empty()) wanted = {1, 2, 3, 4, 5, 6, 7};

    Check (*criteria[])() = {criterion1, criterion2, criterion3, criterion4,
                             criterion5, criterion6, criterion7};
    bool all_ok = true;
    for (int n : wanted) {
        if (n < 1 || n > 7) {
            std::cerr << "unknown criterion " << n << "\n";
            return 2;
        }
        Check c;
        try {
            c = criteria[n - 1]();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail = std::string("exception: ") + e.what();
        }
        std::cout << "CRITERION " << n << ": " << (c.ok ? "PASS" : "FAIL")
                  << (c.detail.empty() ? "" : " — " + c.detail) << "\n"
                  << std::flush;
        all_ok = all_ok && c.ok;
    }
    return all_ok ? 0 : 1;
}
