#ifndef VERLINDE_SWEEPS_HPP
#define VERLINDE_SWEEPS_HPP

#include <string>

#include "verlinde/verlinde.hpp"

namespace verlinde {

// Outcome of one exhaustive verification sweep. `detail` holds the first
// counterexample on failure, or a short summary on success.
struct SweepResult {
    std::string name;
    bool pass = true;
    unsigned long long checks = 0;
    std::string detail;

    void fail(const std::string& msg) {
        if (pass) {
            pass = false;
            detail = msg;
        }
    }
};

// Theorem 1 closed form vs the 2h^3-term oracle character sum, every
// character of X_h, h <= max_h, 2 <= q <= max_q.
SweepResult sweep_theorem1(unsigned max_h, unsigned max_q);

// Lemma chr: closed M_k trace vs Newton oracle x wedge power, all
// elements of H_h.
SweepResult sweep_lemma_chr(unsigned max_h, unsigned max_q);

// Lemma nl: brute-force torsion sums vs (h^2/d^2){...} for h <= max_h,
// all delta | h, lambda | h; plus N multiplicativity for coprime pairs
// up to mult_max.
SweepResult sweep_lemma_nl(unsigned max_h, unsigned mult_max);

// Theorem 3 closed multiplicities vs the mu_{2hr} x X_h character sum,
// hr <= max_hr, k <= max_k, gcd(r,k) = 1.
SweepResult sweep_theorem3(unsigned max_hr, unsigned max_k);

// The representation identity Sym^{hk} S_{hr}^dual = R (x) sum chi^{m_chi},
// element-wise on all of H_{hr}, for the six pinned (h, r, k) tuples.
SweepResult sweep_final_identity();

// Oracle multiplicities constant on character-order classes (h <= max_h,
// q <= max_q); orbit automorphism construction for every same-order pair
// at h <= autom_max_h.
SweepResult sweep_order_orbit(unsigned max_h, unsigned max_q, unsigned autom_max_h);

// Integrality, nonnegativity and rank conservation of every report at
// R <= max_R, L <= max_L; Popa's rank value for the r = 1 rows.
SweepResult sweep_rank_integrality(unsigned max_R, unsigned max_L);

// splits_into_line_bundles(R, L) == (R | L) == decompose's r = 1 flag.
SweepResult sweep_splitting(unsigned max_R, unsigned max_L);

// The pinned table values: decompose(2,2), (3,3), (2,1), (2,3).
SweepResult sweep_concrete_tables();

}  // namespace verlinde

#endif
