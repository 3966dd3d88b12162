#include "zgb/corpus.hpp"

namespace zgb {

namespace {

std::string ideal_zz_dp(const std::string& name,
                        const std::string& vars,
                        const std::string& gens) {
    return "ring ZZ[" + vars + "] order dp;\nideal " + name + " = " + gens +
           ";\n";
}

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> c;

    c.push_back({"ex33",
                 ideal_zz_dp("I", "x,y", "x+4, x*y+9, x-y+8"),
                 {"7", "x+4", "y-4"},
                 ""});

    c.push_back({"ex42",
                 "ring ZZ[x,y] order ds;\nideal I = 6+y+x^2, 4+x;\n",
                 {"2-x+y+x^2", "x-2*y-x^2-x*y-x^3"},
                 ""});

    // ALL-favorable family (ZZ[x,y,z], dp).
    c.push_back({"A1", ideal_zz_dp("I", "x,y,z",
        "17*x^2*y, "
        "22*y^3*z+3*x^2*z^2+28*y^2*z^2+9*y*z^2+83*x^2+13*y*z, "
        "66*y^3*z+63*x*y*z^2+85*z^3"), {}, ""});
    c.push_back({"A2", ideal_zz_dp("I", "x,y,z",
        "27*x*y*z+13*x^2+89*y^2+42*x*z, "
        "35*x^3+68*x*y, "
        "44*x^3+13*y^3+81*y^2*z+4*y*z^2"), {}, ""});
    c.push_back({"A3", ideal_zz_dp("I", "x,y,z",
        "98*x^3*y+45*y*z^3, "
        "16*x*y^3+50*x^2*y+45*y^2+82*z^2, "
        "9*x^3*y+49*x^2*y*z+61*y^2*z+52*z^3"), {}, ""});
    c.push_back({"A4", ideal_zz_dp("I", "x,y,z",
        "25*y^3, "
        "60*y^3+12*x*y*z+54*y^2*z+98*y*z^2+35*x^2+88*x*y+19*z^2, "
        "87*x^2*y+96*x^2"), {}, ""});
    c.push_back({"A5", ideal_zz_dp("I", "x,y,z",
        "76*y^2*z+61*y^2+51*y*z+19*z^2, "
        "31*x^3+3*x*y^2+70*y^2*z, "
        "84*x^3+30*x^2*z+44*x*z"), {}, ""});
    c.push_back({"A6", ideal_zz_dp("I", "x,y,z",
        "19*x^3+2*x*y+29*y^2, "
        "9*x*y^2+42*y^3+2*y*z^2, "
        "54*x*y^2+83*x^2*z+98*x*y+78*y*z"), {}, ""});
    c.push_back({"A7", ideal_zz_dp("I", "x,y,z",
        "72*x^3*y+50*x^2*y*z, "
        "64*x^3*z+30*x^2*y*z+74*x^3+38*x*y^2+74*z^3, "
        "76*x^2*y^2+13*y^2+40*z^2"), {}, ""});
    c.push_back({"A8", ideal_zz_dp("I", "x,y,z",
        "27*x*z^3+87*y^2*z+3*z^2, "
        "67*x^3*z+42*y^3*z+67*x^2*y+90*y*z^2+73*x*y, "
        "38*x^3*y+69*x^2*y*z"), {}, ""});
    c.push_back({"A9", ideal_zz_dp("I", "x,y,z",
        "21*x^3*y+18*x^3*z+45*x^2*y*z+100*x*y^2*z+43*y*z, "
        "85*x^2*y+93*x*y^2, "
        "14*y^2*z^2+6*x^2*y+91*z^2"), {}, ""});
    c.push_back({"A10", ideal_zz_dp("I", "x,y,z",
        "69*y^2, "
        "47*x^3*y+82*x*y*z^2+74*y*z^3+55*x*y*z+96*x*z^2+46*x^2, "
        "16*x*y^2*z+17*z^4+36*y*z^2"), {}, ""});

    // JUST-favorable family (ZZ[x,y,z], dp).
    c.push_back({"B1", ideal_zz_dp("I", "x,y,z",
        "6*x^3*z+29*x^2*z+42*x*y, "
        "x^3*z+47*x^2*y*z+28*x*z^2+46*x^2, "
        "96*z^3"), {}, ""});
    c.push_back({"B2", ideal_zz_dp("I", "x,y,z",
        "9*x^2*y^2+51*x^3*z+10*z^3+28*x^2+7*y^2, "
        "43*x^3*y+3*x^2*z^2+86*x*y*z^2+24*z^4+67*x^2*z+68*y*z^2+27*x*y, "
        "23*x*z^2"), {}, ""});
    c.push_back({"B3", ideal_zz_dp("I", "x,y,z",
        "50*x*z^3+49*y*z^2+15*z^2, "
        "2*x^3*y+16*y^3*z+74*y^3+53*x^2, "
        "4*x*y^2"), {}, ""});
    c.push_back({"B4", ideal_zz_dp("I", "x,y,z",
        "57*x*y*z^2+32*y^3+26*y*z^2+24*z^2, "
        "27*y^4+33*y^3*z+94*z^2, "
        "52*x^2*z"), {}, ""});
    c.push_back({"B5", ideal_zz_dp("I", "x,y,z",
        "91*y^4+20*x^3*z+34*x^2, "
        "38*x*y*z^2+18*x^3+95*x^2*z+82*y*z, "
        "98*y^3"), {}, ""});

    // B1 over ZZ/10^200 (finite-ring coefficient-bound comparison run).
    {
        std::string mod = "1" + std::string(200, '0');
        c.push_back({"B1_mod10e200",
                     "ring ZZ/" + mod + "[x,y,z] order dp;\nideal I = "
                     "6*x^3*z+29*x^2*z+42*x*y, "
                     "x^3*z+47*x^2*y*z+28*x*z^2+46*x^2, "
                     "96*z^3;\n",
                     {},
                     ""});
    }

    // The 70-generator ideal over ZZ[x,y,z], dp, with its 9-element basis.
    c.push_back({"f70", ideal_zz_dp("I", "x,y,z",
        "44*x^3*z+y^2*z-y*z+11*y, "
        "y^3*z^2-y^2*z^2+11*y^2*z+484, "
        "y^4*z-y^3*z-10648*x^3+11*y^3-44*y^2+44*y, "
        "x^3*y*z^2-2, "
        "11*x^3*y^2*z+484*x^3+2*y^2-2*y, "
        "117128*x^6-121*x^3*y^3+968*x^3*y^2-968*x^3*y+2*y^4-4*y^3+2*y^2, "
        "121*x^6*z^3+y*z-z+11, "
        "2178*x^2*y^2*z^3-1452*x^2*y*z^3+15972*x^2*y*z^2, "
        "1452*x^2*y^3*z^2-1452*x^2*y^2*z^2+7986*x^2*y^2*z, "
        "-726*x^3*y^2*z^2+484*x^3*y*z^2+y^4*z^2-5324*x^3*y*z-y^3*z^2"
        "+22*y^3*z-11*y^2*z+121*y^2, "
        "2904*x^2*y^3*z^2-2178*x^2*y^2*z^2+23958*x^2*y^2*z+351384*x^2, "
        "726*x^2*y^4*z-726*x^2*y^3*z+7730448*x^5+31944*x^2*y^2-31944*x^2*y, "
        "-968*x^3*y^3*z+726*x^3*y^2*z-2*y^5*z-7986*x^3*y^2+4*y^4*z"
        "+21296*x^3*y-22*y^4-2*y^3*z-10648*x^3+110*y^3-132*y^2+44*y, "
        "95832*x^2*y^2*z^2-63888*x^2*y*z^2+702768*x^2*y*z, "
        "63888*x^2*y^3*z-63888*x^2*y^2*z+351384*x^2*y^2, "
        "-5*y^6*z^2+9*y^5*z^2-88*y^5*z-4*y^4*z^2+253*y^4*z-363*y^4"
        "-264*y^3*z+968*y^3+88*y^2*z-484*y^2, "
        "726*x^5*z^3-6*x^2*y^2*z^3+3*x^2*y*z^3-33*x^2*y*z^2, "
        "726*x^5*y*z^2-3*x^2*y^3*z^2+3*x^2*y^2*z^2, "
        "-242*x^6*z^2+3*x^3*y^2*z^2-x^3*y*z^2+22*x^3*y*z, "
        "-9*x^2*y^3*z^4+6*x^2*y^2*z^4-66*x^2*y^2*z^3, "
        "-6*x^2*y^4*z^3+6*x^2*y^3*z^3-33*x^2*y^3*z^2, "
        "4*x^3*y^3*z^3-2*x^3*y^2*z^3+33*x^3*y^2*z^2, "
        "-12*x^2*y^4*z^3+9*x^2*y^3*z^3-31944*x^5*z^2-99*x^2*y^3*z^2"
        "+264*x^2*y^2*z^2-132*x^2*y*z^2, "
        "-3*x^2*y^5*z^2+3*x^2*y^4*z^2-63888*x^5*y*z, "
        "7*x^3*y^4*z^2-5*x^3*y^3*z^2+66*x^3*y^3*z-176*x^3*y^2*z+88*x^3*y*z, "
        "15972*x^5*y*z^2-66*x^2*y^3*z^2+33*x^2*y^2*z^2-363*x^2*y^2*z"
        "-15972*x^2, "
        "-33*x^2*y^4*z+33*x^2*y^3*z-351384*x^5-1452*x^2*y^2+1452*x^2*y, "
        "-5324*x^6*y*z+11*x^3*y^2*z+121*x^3*y^2-968*x^3*y+484*x^3-4*y^3"
        "+6*y^2-2*y, "
        "-99*x^2*y^4*z^3+66*x^2*y^3*z^3-726*x^2*y^3*z^2-4356*x^2*y^2*z^2"
        "+2904*x^2*y*z^2-31944*x^2*y*z, "
        "-66*x^2*y^5*z^2+66*x^2*y^4*z^2-363*x^2*y^4*z-2904*x^2*y^3*z"
        "+2904*x^2*y^2*z-15972*x^2*y^2, "
        "-11*x^3*y^4*z^2+22*x^3*y^3*z^2-8*y^4*z+12*y^3*z-44*y^3-4*y^2*z"
        "+22*y^2, "
        "-132*x^2*y^5*z^2+99*x^2*y^4*z^2-702768*x^5*y*z-1089*x^2*y^4*z"
        "-2904*x^2*y^3*z+2904*x^2*y^2*z-47916*x^2*y^2, "
        "-33*x^2*y^6*z+33*x^2*y^5*z-351384*x^5*y^2-1452*x^2*y^4"
        "+1452*x^2*y^3, "
        "22*x^3*y^5*z-11*x^3*y^4*z+363*x^3*y^4-968*x^3*y^3+484*x^3*y^2"
        "-4*y^5+6*y^4-2*y^3, "
        "33*x^5*y^2*z^3-1452*x^5*z^2+12*x^2*y^2*z^2-6*x^2*y*z^2, "
        "-33*x^5*y^3*z^2-2904*x^5*y*z, "
        "-33*x^6*y^2*z^2-8*x^3*y^2*z+4*x^3*y*z, "
        "-263538*x^5*y^2*z+726*x^2*y^4*z-363*x^2*y^3*z-7730448*x^5"
        "+3993*x^2*y^3-31944*x^2*y^2+31944*x^2*y, "
        "-170069856*x^8+87846*x^5*y^3-1405536*x^5*y^2+363*x^2*y^5"
        "+1405536*x^5*y-3267*x^2*y^4+5808*x^2*y^3-2904*x^2*y^2, "
        "87846*x^6*y^2-468512*x^6*y+363*x^3*y^4+234256*x^6-4235*x^3*y^3"
        "+5808*x^3*y^2-8*y^5-1936*x^3*y+20*y^4-16*y^3+4*y^2, "
        "-2108304*x^5*y^2*z^2+1089*x^2*y^5*z^2+1405536*x^5*y*z^2"
        "-9438*x^2*y^4*z^2-15460896*x^5*y*z+7986*x^2*y^4*z"
        "+14520*x^2*y^3*z^2-63888*x^2*y^3*z-5808*x^2*y^2*z^2"
        "+63888*x^2*y^2*z, "
        "-1405536*x^5*y^3*z+726*x^2*y^6*z+1405536*x^5*y^2*z"
        "-6534*x^2*y^5*z-7730448*x^5*y^2+3993*x^2*y^5+11616*x^2*y^4*z"
        "-31944*x^2*y^4-5808*x^2*y^3*z+31944*x^2*y^3, "
        "726*x^3*y^5*z-4598*x^3*y^4*z+3993*x^3*y^4+5808*x^3*y^3*z"
        "-16*y^6*z-21296*x^3*y^3-1936*x^3*y^2*z+40*y^5*z+10648*x^3*y^2"
        "-88*y^5-32*y^4*z+132*y^4+8*y^3*z-44*y^3, "
        "-2811072*x^5*y^3*z+1452*x^2*y^6*z+2108304*x^5*y^2*z"
        "-12705*x^2*y^5*z-11595672*x^5*y^2+11979*x^2*y^5+20328*x^2*y^4*z"
        "-127776*x^2*y^4-8712*x^2*y^3*z+111804*x^2*y^3, "
        "-702768*x^5*y^4+363*x^2*y^7+702768*x^5*y^3-3267*x^2*y^6"
        "+5808*x^2*y^5-2904*x^2*y^4, "
        "363*x^3*y^6-2299*x^3*y^5+2904*x^3*y^4-8*y^7-968*x^3*y^3+20*y^6"
        "-16*y^5+4*y^4, "
        "-702768*x^8*z^2-726*x^5*y^3*z^2+2904*x^5*y^2*z^2+24*x^2*y^4*z^2"
        "-36*x^2*y^3*z^2+12*x^2*y^2*z^2, "
        "-1405536*x^8*y*z+726*x^5*y^4*z-5808*x^5*y^3*z+5808*x^5*y^2*z, "
        "726*x^6*y^3*z-3872*x^6*y^2*z+1936*x^6*y*z-16*x^3*y^4*z"
        "+24*x^3*y^3*z-8*x^3*y^2*z, "
        "-15460896*x^8*y*z-3993*x^5*y^4*z+31944*x^5*y^2*z+264*x^2*y^5*z"
        "-527076*x^5*y^2-396*x^2*y^4*z+1452*x^2*y^4+132*x^2*y^3*z"
        "-726*x^2*y^3, "
        "-7730448*x^8*y^2+3993*x^5*y^5-31944*x^5*y^4+31944*x^5*y^3, "
        "3993*x^6*y^4-21296*x^6*y^3+10648*x^6*y^2-88*x^3*y^5+132*x^3*y^4"
        "-44*x^3*y^3, "
        "-1452*x^5*y*z^4+726*x^5*z^4-7986*x^5*z^3+726*x^2*z^2, "
        "87846*x^8*z^3-726*x^5*y^2*z^3+726*x^5*y*z^3+726*x^2*y*z"
        "-726*x^2*z, "
        "726*x^6*y*z^3-363*x^6*z^3+3993*x^6*z^2-242*x^3*z+y^2*z-2*y*z"
        "+11*y+z-11, "
        "-2178*x^5*y^2*z^5+1452*x^5*y*z^5-15972*x^5*y*z^4, "
        "-1452*x^5*y^3*z^4+1452*x^5*y^2*z^4-7986*x^5*y^2*z^3, "
        "1089*x^6*y^2*z^4-726*x^6*y*z^4+7986*x^6*y*z^3+y^3*z^2-3*y^2*z^2"
        "+11*y^2*z+2*y*z^2-22*y*z, "
        "-2904*x^5*y^3*z^4+2178*x^5*y^2*z^4-23958*x^5*y^2*z^3"
        "+63888*x^5*y*z^3-31944*x^5*z^3-31944*x^2*z, "
        "-726*x^5*y^4*z^3+726*x^5*y^3*z^3-11595672*x^8*z^2-31944*x^2*y"
        "+31944*x^2, "
        "1452*x^6*y^3*z^3-1089*x^6*y^2*z^3+11979*x^6*y^2*z^2"
        "-31944*x^6*y*z^2+15972*x^6*z^2+3*y^4*z-6*y^3*z+33*y^3+3*y^2*z"
        "-121*y^2+132*y-44, "
        "-726*x^8*z^5+3*x^2*y*z^3, "
        "-363*x^8*y*z^4+3*x^2*y^2*z^2-3*x^2*y*z^2, "
        "363*x^9*z^4-x^3*y*z^2-x^3*z^2, "
        "-15972*x^8*y*z^4-2904*x^5*y*z^3+1452*x^5*z^3+33*x^2*y^2*z^2"
        "+1452*x^2*z, "
        "3993*x^8*y^2*z^3+527076*x^8*z^2+33*x^2*y^3*z-33*x^2*y^2*z"
        "+1452*x^2*y-1452*x^2, "
        "7986*x^9*y*z^3+1452*x^6*y*z^2-726*x^6*z^2+11*x^3*y^2*z"
        "-22*x^3*y*z+4*y^2-6*y+2, "
        "263538*x^8*y^2*z^3-1405536*x^8*y*z^3+702768*x^8*z^3"
        "-5808*x^5*y^3*z^3+8712*x^5*y^2*z^3-2904*x^5*y*z^3+702768*x^5*z"
        "-363*x^2*y^3*z+2904*x^2*y^2*z-2904*x^2*y*z, "
        "255104784*x^11*z^2-131769*x^8*y^3*z^2+1054152*x^8*y^2*z^2"
        "-1054152*x^8*y*z^2+702768*x^5*y-363*x^2*y^4-702768*x^5"
        "+3267*x^2*y^3-5808*x^2*y^2+2904*x^2*y, "
        "-131769*x^9*y^2*z^2+702768*x^9*y*z^2-351384*x^9*z^2"
        "+2904*x^6*y^3*z^2-4356*x^6*y^2*z^2+1452*x^6*y*z^2-363*x^3*y^3"
        "+2299*x^3*y^2-2904*x^3*y+8*y^4+968*x^3-20*y^3+16*y^2-4*y"),
        {"18", "6*z-12", "2*y-4", "2*z^2+4*z+8", "y*z+z+3",
         "3*x^2*z-15*x^2", "x^2*y+3*x^2*z+x^2", "x^3+10*z",
         "x^2*z^2-4*x^2*z-11*x^2"},
        "f69 prints one factor as x^11; recorded as x to the 11th, "
        "consistent with the listing's total-degree patterns. The first "
        "generator is printed with leading coefficient 42, but then it is "
        "not a member of the ideal of the published basis (its strong "
        "normal form is 842*z+1702, and 842 is not divisible by 6); the "
        "membership congruences force the coefficient to be 8 mod 9, and "
        "with the nearest value, 44, the computed basis matches the "
        "published one exactly. Recorded as 44."});

    return c;
}

const std::vector<CorpusEntry>& entries() {
    static const std::vector<CorpusEntry> c = build_corpus();
    return c;
}

}  // namespace

std::span<const CorpusEntry> corpus() { return entries(); }

const CorpusEntry* corpus_find(const std::string& name) {
    for (const auto& e : entries())
        if (e.name == name) return &e;
    return nullptr;
}

IdealSource corpus_load(const std::string& name) {
    const CorpusEntry* e = corpus_find(name);
    if (!e) throw Error("unknown corpus entry: " + name);
    IdealSource src = parse_ideal_file(e->source);
    src.name = e->name;
    if (!e->expected.empty()) {
        std::vector<Poly> exp;
        for (const auto& s : e->expected) exp.push_back(parse_poly(src.ctx, s));
        src.expected = std::move(exp);
    }
    return src;
}

uint64_t corpus_checksum() {
    uint64_t h = 1469598103934665603ULL;  // FNV-1a
    auto feed = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
    };
    for (const auto& e : entries()) {
        feed(e.name);
        feed(e.source);
        for (const auto& x : e.expected) feed(x);
    }
    return h;
}

}  // namespace zgb
