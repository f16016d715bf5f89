#ifndef VERLINDE_VERLINDE_HPP
#define VERLINDE_VERLINDE_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "verlinde/chartab.hpp"

namespace verlinde {

// Character (a, b) of X_h = (Z/h)^2, value zeta_h^{ax+by}.
struct Character {
    unsigned h;
    unsigned a;
    unsigned b;

    Character(unsigned h_, long long a_, long long b_);

    unsigned order() const;
    // exponent of zeta_h of the value at (x, y)
    unsigned value_exp(long long x, long long y) const;

    friend bool operator==(const Character&, const Character&) = default;
};

// The symbol {lam/h}: 0 unless prod p_i^{a_i - 1} divides lam, else
// prod (eps_i - 1/p_i^2) with eps_i = 1 iff p_i^{a_i} | lam; 1 for h = 1.
Rat brace_symbol(unsigned long lam, unsigned long h);

// sum of xi over the pairs (x, y) with gcd(h, x, y) = delta, in closed
// form (h^2/delta^2) {(h/omega)/(h/delta)} and by brute-force root
// summation. Both paths are part of the contract.
Rat torsion_sum(unsigned h, const Character& xi, unsigned delta);
Rat torsion_sum_brute(unsigned h, const Character& xi, unsigned delta);

// Multiplicity of the h-torsion line bundle of order omega in the
// splitting of E_{h,h(q-1)}; the even/even case carries the extra
// (-1)^delta inside the sum.
Rat mult_theorem1(unsigned h, unsigned q, unsigned omega);

// Same multiplicity via the 2h^3-term character sum with oracle traces.
Rat mult_charsum_oracle(unsigned h, unsigned q, const Character& xi);
// All h^2 characters at once off one shared trace table, keyed by (a, b).
std::map<std::pair<unsigned, unsigned>, Rat> mult_charsum_oracle_all(unsigned h, unsigned q);

// Multiplicity of W_{r,k,xi} (order omega) in the splitting of E_{hr,hk}.
Rat mult_theorem3(unsigned h, unsigned r, unsigned k, unsigned omega);

// The same via the character sum over mu_{2hr} x X_h with the oracle
// symmetric-power trace and the symbolic inverse Schulte trace. chi is a
// character of X_{hr}; the result depends only on its restriction to X_h.
Rat mult_theorem3_charsum_oracle(unsigned h, unsigned r, unsigned k, const Character& chi);
std::map<std::pair<unsigned, unsigned>, Rat> mult_theorem3_charsum_oracle_all(unsigned h,
                                                                              unsigned r,
                                                                              unsigned k);

struct SummandDescriptor {
    unsigned rank;
    long det_degree;
    Character torsion;
};

struct MultiplicityTable {
    unsigned h = 1;
    std::map<unsigned, Rat> entries;               // order -> multiplicity
    std::map<unsigned, unsigned> character_counts;  // order -> #characters
};

struct DecompositionReport {
    unsigned moduli_rank = 1;  // R
    unsigned level = 1;        // L
    unsigned h = 1, r = 1, k = 1;
    std::optional<unsigned> q;  // present iff r == 1
    MultiplicityTable table;
    std::vector<std::pair<SummandDescriptor, Rat>> summands;  // order-ascending
    Int rank_total;
    bool line_bundle_split = false;
    std::optional<int> theta_twist_shift;  // theorem2 bookkeeping
    std::string theta_label;
};

// Splits E_{R,L}: h = gcd(R,L), r = R/h, k = L/h; multiplicities from
// mult_theorem3, certified integral and nonnegative, with the rank
// identity sum counts(w) m(w) r = binom(L+R-1, R-1) checked on the spot.
DecompositionReport decompose(unsigned R, unsigned L);

// Lemma-level splitting criterion: E_{R,L} is a sum of line bundles iff
// R divides L.
bool splits_into_line_bundles(unsigned R, unsigned L);

// Rank/degree bookkeeping of W_{h,d}^{(x) k}: splits into `count` summands
// W_{h', d k'} (x) M with h' = h/gcd(h,k), k' = k/gcd(h,k); the torsion
// twists M are not computed.
struct TensorPowerShape {
    unsigned h_prime;
    unsigned k_prime;
    unsigned summand_rank;
    long summand_degree;
    Int count;
};

TensorPowerShape tensor_power_shape(unsigned h, long d, unsigned k);

// Arbitrary rank/degree wrapper: for h = gcd(r, d) dividing K this is the
// Theorem 1 table at (h, q = 1 + K/h), twisted by Theta_{1,(det N)^h};
// throws std::domain_error otherwise (the bundle is not a sum of line
// bundles; use decompose).
DecompositionReport theorem2_decompose(unsigned r, long d, unsigned K, int detN_degree_shift);

std::vector<Character> enumerate_characters(unsigned h);
std::map<unsigned, unsigned> character_order_counts(unsigned h);

// Automorphism of H_h fixing the center and carrying chi1 to chi2, found
// by exhaustive search of the two congruence systems plus det = 1. The
// cocycle factor is realized as a zeta_{2h}-exponent and the constructed
// map is checked to be a homomorphism; the outcome is reported (and is a
// hard requirement for h odd).
struct OrbitAutomorphism {
    unsigned lambda, mu, nu, gamma;
    bool homomorphism_checked = false;
    bool homomorphism_ok = false;

    // the induced map on X_h: (x, y) -> (lambda x + nu y, mu x + gamma y)
    std::pair<unsigned, unsigned> apply_xy(unsigned h, unsigned x, unsigned y) const;
    HeisElem apply(const HeisElem& g) const;
};

OrbitAutomorphism order_orbit_automorphism(unsigned h, const Character& chi1,
                                           const Character& chi2);

}  // namespace verlinde

#endif
