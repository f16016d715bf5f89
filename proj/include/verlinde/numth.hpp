#ifndef VERLINDE_NUMTH_HPP
#define VERLINDE_NUMTH_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace verlinde {

// Prime factorization by trial division, (prime, exponent) pairs in
// ascending prime order. n >= 1; factorize(1) is empty.
inline std::vector<std::pair<unsigned long, unsigned>> factorize(unsigned long n) {
    std::vector<std::pair<unsigned long, unsigned>> out;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        unsigned a = 0;
        while (n % p == 0) {
            n /= p;
            ++a;
        }
        out.emplace_back(p, a);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// Sorted list of all positive divisors of n >= 1.
inline std::vector<unsigned long> divisors(unsigned long n) {
    std::vector<unsigned long> out;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        if (d != n / d) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline unsigned long euler_phi(unsigned long n) {
    unsigned long phi = n;
    for (auto [p, a] : factorize(n)) {
        (void)a;
        phi -= phi / p;
    }
    return phi;
}

// Extended gcd: returns g = gcd(a, b) and sets u, v with a*u + b*v = g.
inline long long ext_gcd(long long a, long long b, long long& u, long long& v) {
    if (b == 0) {
        u = (a >= 0) ? 1 : -1;
        v = 0;
        return a >= 0 ? a : -a;
    }
    long long u1 = 0, v1 = 0;
    long long g = ext_gcd(b, a % b, u1, v1);
    u = v1;
    v = u1 - (a / b) * v1;
    return g;
}

// gcd with the convention gcd(n, 0) = n used throughout.
inline unsigned long gcd_u(unsigned long a, unsigned long b) { return std::gcd(a, b); }

inline long long mod_ll(long long v, long long m) {
    long long r = v % m;
    return r < 0 ? r + m : r;
}

}  // namespace verlinde

#endif
