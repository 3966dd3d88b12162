#pragma once

#include <set>
#include <vector>

#include "zgb/poly.hpp"

namespace zgb {

// sp(f,g): leading terms cancel. Pre: f, g nonzero, same context.
Poly spoly(const Poly& f, const Poly& g);

struct GPoly {
    Poly p;
    bool redundant;  // one leading coefficient divides the other
};

// gp(f,g): Bezout combination with lt = c * lcm(m_f, m_g) when not
// redundant. Rejects fields. Pre: f, g nonzero.
GPoly gpoly(const Poly& f, const Poly& g);

// ep(f) = Ann(lc(f)) * f; zero unless lc(f) is a zero divisor.
Poly epoly(const Poly& f);

enum class PairKind { Gcd, S, Ext };  // selection priority in this order

struct CriticalPair {
    PairKind kind;
    int i, j;      // basis indices, i < j; j unused (=i) for Ext
    Monomial lcm;  // lcm(lm_i, lm_j); lm_i for Ext
    unsigned long seq;
};

enum class Strategy { ALL, JUST };

// Pending-pair queue with deterministic selection: minimal
// (deg(lcm), lcm under a fixed DegRevLex tie ordering, kind, seq).
class PairQueue {
public:
    explicit PairQueue(Strategy s) : strategy_(s) {}

    Strategy strategy() const { return strategy_; }
    bool empty() const { return pending_.empty(); }
    size_t size() const { return pending_.size(); }
    unsigned long created() const { return seq_; }

    // Enqueue the pairs of the just-appended basis element new_index
    // against all earlier elements, plus its extended pair when the ring
    // has zero divisors and the annihilator is nonzero.
    void update(const std::vector<Poly>& basis, int new_index);
    // As above, but skip earlier elements marked inactive (superseded
    // reducers pruned by the engine; their already-queued pairs remain).
    void update(const std::vector<Poly>& basis, int new_index,
                const std::vector<char>& active);

    CriticalPair select();

private:
    struct Less {
        bool operator()(const CriticalPair& a, const CriticalPair& b) const;
    };
    Strategy strategy_;
    std::multiset<CriticalPair, Less> pending_;
    unsigned long seq_ = 0;
};

// Materialize the pair polynomial against the current basis.
Poly materialize(const CriticalPair& p, const std::vector<Poly>& basis);

}  // namespace zgb
