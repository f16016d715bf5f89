#include "verlinde/chartab.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "verlinde/numth.hpp"

namespace verlinde {

CycloNum sym_trace_oracle(unsigned n, unsigned K, const HeisElem& g) {
    if (g.n != n) throw std::invalid_argument("element level does not match n");
    const unsigned order = 2 * n;
    if (K == 0) return CycloNum::from_rational(order, 1);

    const CycloMatrix m = schrodinger_matrix(hinv(g));
    std::vector<CycloNum> p;  // power sums, p[i] = trace(m^i)
    p.reserve(K + 1);
    p.emplace_back(order);  // unused p[0]
    CycloMatrix acc = m;
    for (unsigned i = 1; i <= K; ++i) {
        p.push_back(acc.trace());
        if (i < K) acc = acc * m;
    }

    std::vector<CycloNum> h;  // complete homogeneous, h[0] = 1
    h.reserve(K + 1);
    h.push_back(CycloNum::from_rational(order, 1));
    for (unsigned j = 1; j <= K; ++j) {
        CycloNum s(order);
        for (unsigned i = 1; i <= j; ++i) s += p[i] * h[j - i];
        s *= make_rat(1, static_cast<long>(j));
        h.push_back(std::move(s));
    }
    return h[K];
}

CycloNum sym_trace_direct(unsigned n, unsigned K, const HeisElem& g) {
    if (g.n != n) throw std::invalid_argument("element level does not match n");
    if (static_cast<unsigned long>(n) * K > 12)
        throw std::invalid_argument("direct symmetric-power oracle limited to n*K <= 12");
    const unsigned order = 2 * n;
    if (K == 0) return CycloNum::from_rational(order, 1);

    // g . f^i = alpha' zeta^{y' i} f^{i + x'} on the dual basis, where
    // (t', x', y') = hinv(g). A degree-K monomial contributes its scalar
    // to the trace iff its index multiset is fixed by the shift.
    const HeisElem gi = hinv(g);
    CycloNum total(order);
    std::vector<unsigned> idx(K, 0);
    while (true) {
        std::vector<unsigned> shifted(K);
        for (unsigned a = 0; a < K; ++a) shifted[a] = (idx[a] + gi.x) % n;
        std::sort(shifted.begin(), shifted.end());
        if (shifted == idx) {
            unsigned long sum = 0;
            for (unsigned a = 0; a < K; ++a) sum += idx[a];
            long long e = static_cast<long long>(gi.t) * K + 2LL * gi.y * sum;
            total += CycloNum::root_of_unity(order, e);
        }
        // next nondecreasing tuple
        int pos = static_cast<int>(K) - 1;
        while (pos >= 0 && idx[static_cast<unsigned>(pos)] == n - 1) --pos;
        if (pos < 0) break;
        unsigned v = idx[static_cast<unsigned>(pos)] + 1;
        for (unsigned a = static_cast<unsigned>(pos); a < K; ++a) idx[a] = v;
    }
    return total;
}

Rat mk_trace_closed(unsigned h, unsigned q, const HeisElem& g) {
    if (q < 2) throw std::invalid_argument("Mk requires q >= 2");
    if (g.n != h) throw std::invalid_argument("element level does not match h");
    const unsigned delta = order_data(g).delta;
    Rat v = make_rat(binomial(static_cast<unsigned long>(q) * delta, delta), Int(q));
    if (h % 2 == 0 && q % 2 == 0 && delta % 2 == 1) v = -v;
    return v;
}

CycloNum wedge_trace(const HeisElem& g) {
    const unsigned n = g.n;
    // alpha^n = zeta_{2n}^{tn} = (-1)^t
    const unsigned parity =
        (g.t + static_cast<unsigned long long>(n + 1) * (g.x + g.y)) % 2;
    return CycloNum::from_rational(2 * n, parity ? Rat(-1) : Rat(1));
}

CycloNum symhk_trace_closed(unsigned h, unsigned r, unsigned k, const HeisElem& g) {
    if (std::gcd(r, k) != 1) throw std::invalid_argument("r and k must be coprime");
    const unsigned n = h * r;
    if (g.n != n) throw std::invalid_argument("element level does not match h*r");
    const unsigned order = 2 * n;
    if (g.x % r != 0 || g.y % r != 0) return CycloNum(order);

    const unsigned delta = std::gcd(std::gcd(n, g.x), g.y) / r;
    Rat v = make_rat(Int(r) * binomial(static_cast<unsigned long>(r + k) * delta,
                                       static_cast<unsigned long>(r) * delta),
                     Int(r + k));
    const unsigned sign =
        (static_cast<unsigned long long>(g.x) * g.y * k * (h + 1)) % 2;
    if (sign) v = -v;
    long long e = -(static_cast<long long>(g.t) * h * k);
    CycloNum out = CycloNum::root_of_unity(order, e);
    out *= v;
    return out;
}

CycloNum schulte_trace(unsigned h, unsigned r, unsigned k, const HeisElem& g) {
    if (std::gcd(r, k) != 1) throw std::invalid_argument("r and k must be coprime");
    const unsigned n = h * r;
    if (g.n != n) throw std::invalid_argument("element level does not match h*r");
    const unsigned order = 2 * n;
    if (g.x % r != 0 || g.y % r != 0) return CycloNum(order);

    const unsigned sign =
        (static_cast<unsigned long long>(h + 1) * k * r * (g.x + g.y)) % 2;
    long long e = -(static_cast<long long>(g.t) * h * k);
    CycloNum out = CycloNum::root_of_unity(order, e);
    const long rr = static_cast<long>(r);
    out *= Rat(sign ? -rr : rr);
    return out;
}

CycloNum rep_trace(const RepDescriptor& rep, const HeisElem& g) {
    switch (rep.kind) {
        case RepDescriptor::Kind::SymDual:
            return sym_trace_oracle(rep.level, rep.K, g);
        case RepDescriptor::Kind::WedgeTop:
            if (g.n != rep.level) throw std::invalid_argument("element level mismatch");
            return wedge_trace(g);
        case RepDescriptor::Kind::Mk: {
            if (rep.level != rep.h) throw std::invalid_argument("Mk requires level == h");
            Rat v = mk_trace_closed(rep.h, rep.q, g);
            return CycloNum::from_rational(2 * rep.level, v);
        }
        case RepDescriptor::Kind::SchulteR:
            if (rep.level != rep.sh * rep.sr)
                throw std::invalid_argument("Schulte R requires level == h*r");
            return schulte_trace(rep.sh, rep.sr, rep.sk, g);
    }
    throw std::logic_error("unreachable");
}

std::vector<CycloNum> mk_oracle_trace_table(unsigned h, unsigned q) {
    if (q < 2) throw std::invalid_argument("Mk requires q >= 2");
    const unsigned K = h * (q - 1);
    std::vector<CycloNum> table;
    table.reserve(2ull * h * h * h);
    for (const HeisElem& g : all_elements(h)) {
        CycloNum tr = sym_trace_oracle(h, K, g);
        CycloNum w = wedge_trace(g);
        for (unsigned i = 1; i < q; ++i) tr = tr * w;
        table.push_back(std::move(tr));
    }
    return table;
}

}  // namespace verlinde
