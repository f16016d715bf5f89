#ifndef VERLINDE_CHARTAB_HPP
#define VERLINDE_CHARTAB_HPP

#include <string>
#include <vector>

#include "verlinde/heisenberg.hpp"

namespace verlinde {

// Names a representation whose trace can be requested through one entry
// point (the CLI's trace command goes through this).
struct RepDescriptor {
    enum class Kind { SymDual, WedgeTop, Mk, SchulteR };
    Kind kind = Kind::SymDual;
    unsigned level = 1;  // n, the Heisenberg level of the elements fed in
    unsigned K = 0;      // SymDual
    unsigned h = 1, q = 2;          // Mk (level == h, K = h(q-1) implied)
    unsigned sh = 1, sr = 1, sk = 1;  // SchulteR (level == sh*sr, gcd(sr,sk) = 1)
};

// Trace of g on Sym^K(S_n^dual): complete homogeneous symmetric function
// h_K of the eigenvalues of g^{-1}, via power sums
// p_m = trace(schrodinger_matrix(hinv(g))^m) and the Newton recurrence
// K h_K = sum_{i=1..K} p_i h_{K-i}. Exact throughout; this is the
// independent oracle the closed forms are checked against.
CycloNum sym_trace_oracle(unsigned n, unsigned K, const HeisElem& g);

// Second, fully independent route: enumerate the monomial basis of
// Sym^K(S_n^dual) and sum the diagonal of the induced action. Only for
// n*K <= 12; cross-checks the Newton path.
CycloNum sym_trace_direct(unsigned n, unsigned K, const HeisElem& g);

// Closed trace of g on M_k = Sym^{h(q-1)}(S_h^dual) (x) (wedge^h S_h)^{q-1}:
// (1/q) binom(q delta, delta), times (-1)^delta when h and q are both
// even; independent of the central part of g.
Rat mk_trace_closed(unsigned h, unsigned q, const HeisElem& g);

// Trace of g on wedge^n S_n: alpha^n (-1)^{(n+1)(x+y)}.
CycloNum wedge_trace(const HeisElem& g);

// Closed trace of g on Sym^{hk}(S_{hr}^dual): zero off the h-torsion
// subgroup (r | x and r | y); otherwise
// (-1)^{xyk(h+1)} alpha^{-hk} (r/(r+k)) binom((r+k)delta, r delta)
// with delta = gcd(hr,x,y)/r.
CycloNum symhk_trace_closed(unsigned h, unsigned r, unsigned k, const HeisElem& g);

// Trace of g on the Schulte representation R picked out by the trivial
// X_h-module condition: r alpha^{-hk} (-1)^{(h+1)kr(x+y)} on X_h, 0 off it.
CycloNum schulte_trace(unsigned h, unsigned r, unsigned k, const HeisElem& g);

CycloNum rep_trace(const RepDescriptor& rep, const HeisElem& g);

// Oracle traces of every element of H_h on M_k, indexed by heis_index;
// shared by the character-sum sweeps so the 2h^3 Newton evaluations run
// once per (h, q).
std::vector<CycloNum> mk_oracle_trace_table(unsigned h, unsigned q);

}  // namespace verlinde

#endif
