#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>

#include "zgb/error.hpp"

namespace zgb {

enum class OrdKind { Lex, DegRevLex, NegLex, NegDegRevLex };

struct Ordering {
    OrdKind kind;
    int nvars;

    bool is_global() const {
        return kind == OrdKind::Lex || kind == OrdKind::DegRevLex;
    }
    bool is_local() const { return !is_global(); }
    bool operator==(const Ordering&) const = default;
};

// Exponent vector with cached total degree. Exponents are bounded machine
// integers with checked addition; overflow throws rather than wrapping.
class Monomial {
public:
    static constexpr int kMaxVars = 16;
    static constexpr unsigned kMaxExp = 0xFFFF;

    Monomial() : n_(0), deg_(0) { e_.fill(0); }
    explicit Monomial(int nvars) : Monomial() {
        if (nvars < 0 || nvars > kMaxVars) throw Error("bad variable count");
        n_ = static_cast<uint8_t>(nvars);
    }
    Monomial(std::initializer_list<unsigned> exps)
        : Monomial(std::span<const unsigned>(exps.begin(), exps.size())) {}
    explicit Monomial(std::span<const unsigned> exps) : Monomial() {
        if (exps.size() > kMaxVars) throw Error("bad variable count");
        n_ = static_cast<uint8_t>(exps.size());
        for (int i = 0; i < n_; ++i) set_exp(i, exps[i]);
    }

    static Monomial one(int nvars) { return Monomial(nvars); }

    int nvars() const { return n_; }
    unsigned exp(int i) const { return e_[static_cast<size_t>(i)]; }
    unsigned degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }

    void set_exp(int i, unsigned v) {
        if (v > kMaxExp) throw Error("exponent overflow");
        deg_ += v - e_[static_cast<size_t>(i)];
        e_[static_cast<size_t>(i)] = static_cast<uint16_t>(v);
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        check_dims(a, b);
        Monomial r(a.nvars());
        for (int i = 0; i < a.n_; ++i) {
            unsigned s = a.exp(i) + b.exp(i);
            if (s > kMaxExp) throw Error("exponent overflow");
            r.e_[static_cast<size_t>(i)] = static_cast<uint16_t>(s);
        }
        r.deg_ = a.deg_ + b.deg_;
        return r;
    }

    bool divides(const Monomial& m) const {
        check_dims(*this, m);
        for (int i = 0; i < n_; ++i)
            if (exp(i) > m.exp(i)) return false;
        return true;
    }

    // this / d (pre: d.divides(*this))
    Monomial quotient(const Monomial& d) const {
        check_dims(*this, d);
        Monomial r(nvars());
        for (int i = 0; i < n_; ++i)
            r.e_[static_cast<size_t>(i)] = static_cast<uint16_t>(exp(i) - d.exp(i));
        r.deg_ = deg_ - d.deg_;
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        check_dims(a, b);
        Monomial r(a.nvars());
        for (int i = 0; i < a.n_; ++i) {
            unsigned m = a.exp(i) > b.exp(i) ? a.exp(i) : b.exp(i);
            r.e_[static_cast<size_t>(i)] = static_cast<uint16_t>(m);
            r.deg_ += m;
        }
        return r;
    }

    bool operator==(const Monomial& o) const {
        return n_ == o.n_ && deg_ == o.deg_ && e_ == o.e_;
    }

private:
    static void check_dims(const Monomial& a, const Monomial& b) {
        if (a.n_ != b.n_) throw Error("monomial dimension mismatch");
    }
    std::array<uint16_t, kMaxVars> e_;
    uint8_t n_;
    uint32_t deg_;
};

// Three-way comparison under the given ordering: -1, 0, +1 for a <, =, > b.
int compare(const Monomial& a, const Monomial& b, const Ordering& ord);

}  // namespace zgb
