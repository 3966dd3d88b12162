#include "zgb/io.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace zgb {

namespace {

enum class Tok { Ident, Number, Sym, End };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            if (s_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= s_.size()) {
            tok_ = {Tok::End, "", line_, col_};
            return;
        }
        char c = s_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                    s_[pos_] == '_')) {
                ++pos_;
                ++col_;
            }
            tok_ = {Tok::Ident, s_.substr(start, pos_ - start), tok_.line, tok_.col};
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                ++pos_;
                ++col_;
            }
            tok_ = {Tok::Number, s_.substr(start, pos_ - start), tok_.line, tok_.col};
        } else {
            ++pos_;
            ++col_;
            tok_ = {Tok::Sym, std::string(1, c), tok_.line, tok_.col};
        }
    }

    const std::string& s_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

[[noreturn]] void fail(const Token& t, const std::string& msg) {
    throw ParseError(msg + (t.kind == Tok::End ? " (at end of input)"
                                               : " (got '" + t.text + "')"),
                     t.line, t.col);
}

void expect_sym(Lexer& lx, const std::string& s) {
    Token t = lx.take();
    if (t.kind != Tok::Sym || t.text != s) fail(t, "expected '" + s + "'");
}

std::string expect_ident(Lexer& lx, const std::string& what) {
    Token t = lx.take();
    if (t.kind != Tok::Ident) fail(t, "expected " + what);
    return t.text;
}

bool at_sym(const Lexer& lx, const std::string& s) {
    return lx.peek().kind == Tok::Sym && lx.peek().text == s;
}

struct PolyParser {
    Lexer& lx;
    const CtxPtr& ctx;
    std::map<std::string, int> varindex;

    Poly parse() {
        std::vector<Term> terms;
        bool neg = false;
        if (at_sym(lx, "+") || at_sym(lx, "-")) neg = lx.take().text == "-";
        parse_term(terms, neg);
        while (at_sym(lx, "+") || at_sym(lx, "-")) {
            neg = lx.take().text == "-";
            parse_term(terms, neg);
        }
        return Poly(ctx, std::move(terms));
    }

    void parse_term(std::vector<Term>& out, bool neg) {
        Coeff c(1);
        Monomial m(ctx->nvars());
        parse_factor(c, m);
        while (at_sym(lx, "*")) {
            lx.take();
            parse_factor(c, m);
        }
        if (neg) c = -c;
        out.push_back({ctx->ring.canon(std::move(c)), m});
    }

    void parse_factor(Coeff& c, Monomial& m) {
        Token t = lx.take();
        if (t.kind == Tok::Number) {
            Int num(t.text);
            if (ctx->ring.is_field() && at_sym(lx, "/")) {
                lx.take();
                Token d = lx.take();
                if (d.kind != Tok::Number) fail(d, "expected denominator");
                Int den(d.text);
                if (sgn(den) == 0) fail(d, "zero denominator");
                Coeff q(num, den);
                q.canonicalize();
                c *= q;
            } else {
                c *= Coeff(std::move(num));
            }
        } else if (t.kind == Tok::Ident) {
            auto it = varindex.find(t.text);
            if (it == varindex.end()) fail(t, "unknown variable '" + t.text + "'");
            unsigned e = 1;
            if (at_sym(lx, "^")) {
                lx.take();
                Token p = lx.take();
                if (p.kind != Tok::Number) fail(p, "expected exponent");
                Int big(p.text);
                if (big > Monomial::kMaxExp) fail(p, "exponent too large");
                e = static_cast<unsigned>(big.get_ui());
            }
            unsigned cur = m.exp(it->second);
            if (cur + e > Monomial::kMaxExp) fail(t, "exponent overflow");
            m.set_exp(it->second, cur + e);
        } else {
            fail(t, "expected coefficient or variable");
        }
    }
};

}  // namespace

IdealSource parse_ideal_file(const std::string& text) {
    Lexer lx(text);
    Token kw = lx.take();
    if (kw.kind != Tok::Ident || kw.text != "ring") fail(kw, "expected 'ring'");

    Ring ring = Ring::integers();
    Token ck = lx.take();
    if (ck.kind != Tok::Ident) fail(ck, "expected coefficient ring");
    if (ck.text == "ZZ") {
        if (at_sym(lx, "/")) {
            lx.take();
            Token n = lx.take();
            if (n.kind != Tok::Number) fail(n, "expected modulus");
            Int mod(n.text);
            if (mod < 2) fail(n, "modulus must be >= 2");
            ring = Ring::integers_mod(std::move(mod));
        }
    } else if (ck.text == "QQ") {
        ring = Ring::rationals();
    } else {
        fail(ck, "expected ZZ, ZZ/n or QQ");
    }

    expect_sym(lx, "[");
    std::vector<std::string> vars;
    std::map<std::string, int> varindex;
    for (;;) {
        Token v = lx.take();
        if (v.kind != Tok::Ident) fail(v, "expected variable name");
        if (varindex.count(v.text)) fail(v, "duplicate variable '" + v.text + "'");
        varindex[v.text] = static_cast<int>(vars.size());
        vars.push_back(v.text);
        if (at_sym(lx, ",")) {
            lx.take();
            continue;
        }
        break;
    }
    expect_sym(lx, "]");
    if (static_cast<int>(vars.size()) > Monomial::kMaxVars)
        fail(lx.peek(), "too many variables");

    Token ow = lx.take();
    if (ow.kind != Tok::Ident || ow.text != "order") fail(ow, "expected 'order'");
    Token oc = lx.take();
    OrdKind kind;
    if (oc.text == "lp") kind = OrdKind::Lex;
    else if (oc.text == "dp") kind = OrdKind::DegRevLex;
    else if (oc.text == "ls") kind = OrdKind::NegLex;
    else if (oc.text == "ds") kind = OrdKind::NegDegRevLex;
    else fail(oc, "expected ordering lp, dp, ls or ds");
    expect_sym(lx, ";");

    CtxPtr ctx = Context::make(std::move(ring), kind, vars);

    Token iw = lx.take();
    if (iw.kind != Tok::Ident || iw.text != "ideal") fail(iw, "expected 'ideal'");
    IdealSource src;
    src.name = expect_ident(lx, "ideal name");
    src.ctx = ctx;
    expect_sym(lx, "=");
    PolyParser pp{lx, ctx, varindex};
    for (;;) {
        src.generators.push_back(pp.parse());
        if (at_sym(lx, ",")) {
            lx.take();
            continue;
        }
        break;
    }
    expect_sym(lx, ";");
    Token end = lx.take();
    if (end.kind != Tok::End) fail(end, "unexpected trailing input");
    return src;
}

Poly parse_poly(const CtxPtr& ctx, const std::string& text) {
    Lexer lx(text);
    std::map<std::string, int> varindex;
    for (size_t i = 0; i < ctx->vars.size(); ++i)
        varindex[ctx->vars[i]] = static_cast<int>(i);
    PolyParser pp{lx, ctx, varindex};
    Poly p = pp.parse();
    Token end = lx.take();
    if (end.kind != Tok::End) fail(end, "unexpected trailing input");
    return p;
}

namespace {

void print_monomial(std::ostringstream& os, const Monomial& m,
                    const std::vector<std::string>& vars, bool lead_star) {
    bool first = !lead_star;
    for (int i = 0; i < m.nvars(); ++i) {
        if (m.exp(i) == 0) continue;
        if (!first) os << "*";
        first = false;
        os << vars[static_cast<size_t>(i)];
        if (m.exp(i) > 1) os << "^" << m.exp(i);
    }
}

void print_coeff_mag(std::ostringstream& os, const Coeff& c) {
    Coeff a = abs(c);
    os << a.get_num().get_str();
    if (a.get_den() != 1) os << "/" << a.get_den().get_str();
}

}  // namespace

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    const auto& vars = p.ctx()->vars;
    bool first = true;
    for (const auto& t : p.terms()) {
        bool neg = sgn(t.c) < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? "-" : "+");
        }
        first = false;
        Coeff a = abs(t.c);
        if (t.m.is_one()) {
            print_coeff_mag(os, t.c);
        } else if (a == 1) {
            print_monomial(os, t.m, vars, false);
        } else {
            print_coeff_mag(os, t.c);
            os << "*";
            print_monomial(os, t.m, vars, false);
        }
    }
    return os.str();
}

std::string ordering_code(OrdKind k) {
    switch (k) {
        case OrdKind::Lex: return "lp";
        case OrdKind::DegRevLex: return "dp";
        case OrdKind::NegLex: return "ls";
        case OrdKind::NegDegRevLex: return "ds";
    }
    return "?";
}

std::string to_string(const IdealSource& src) {
    std::ostringstream os;
    os << "ring " << src.ctx->ring.to_string() << "[";
    for (size_t i = 0; i < src.ctx->vars.size(); ++i) {
        if (i) os << ",";
        os << src.ctx->vars[i];
    }
    os << "] order " << ordering_code(src.ctx->ord.kind) << ";\n";
    os << "ideal " << src.name << " =\n";
    for (size_t i = 0; i < src.generators.size(); ++i) {
        os << "  " << to_string(src.generators[i])
           << (i + 1 < src.generators.size() ? "," : ";") << "\n";
    }
    return os.str();
}

}  // namespace zgb
