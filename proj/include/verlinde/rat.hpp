#ifndef VERLINDE_RAT_HPP
#define VERLINDE_RAT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace verlinde {

// Exact scalars. GMP keeps rationals canonical (gcd(|num|, den) = 1,
// den >= 1) as long as they are built through these helpers.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

inline Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

// "p/q", or just "p" for integers; the wire format used by the CLI.
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

}  // namespace verlinde

#endif
