#ifndef VERLINDE_CYCLO_HPP
#define VERLINDE_CYCLO_HPP

#include <optional>
#include <string>
#include <vector>

#include "verlinde/rat.hpp"

namespace verlinde {

// Integer polynomial, coefficients lowest degree first. The zero
// polynomial is the empty vector; otherwise the leading coefficient is
// nonzero.
struct IntPoly {
    std::vector<Int> coeffs;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> c) : coeffs(std::move(c)) { normalize(); }

    void normalize();
    bool is_zero() const { return coeffs.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(coeffs.size()) - 1; }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;
};

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
// Exact division by a monic divisor; throws std::logic_error if the
// remainder is nonzero.
IntPoly poly_div_exact_monic(const IntPoly& num, const IntPoly& den);

// n-th cyclotomic polynomial, computed by dividing x^n - 1 by the
// product of Phi_d over proper divisors d | n. Memoized; thread-safe.
const IntPoly& cyclotomic_polynomial(unsigned n);

// Element of Q(zeta_n) in group-ring form: coeffs[i] is the coefficient
// of zeta_n^i, always exactly n entries. Arithmetic is lazy; canonical
// form (reduction modulo Phi_n) happens only on equality tests and
// value extraction. Equality is NOT coefficient-wise: a == b iff
// (a - b) reduces to zero.
class CycloNum {
public:
    explicit CycloNum(unsigned order);
    static CycloNum root_of_unity(unsigned n, long long e);
    static CycloNum from_rational(unsigned n, const Rat& v);

    unsigned order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    // += c * zeta^e, without reduction
    void add_root_multiple(long long e, const Rat& c);

    bool literally_zero() const;  // all stored coefficients zero (no reduction)

    CycloNum reduced() const;
    std::optional<Rat> to_rational() const;
    bool is_zero() const;  // canonical test

    // reinterpret in Q(zeta_m) for order() | m, via zeta_n = zeta_m^{m/n}
    CycloNum embed_into(unsigned m) const;

    CycloNum pow(unsigned long k) const;

    CycloNum& operator+=(const CycloNum& rhs);
    CycloNum& operator-=(const CycloNum& rhs);
    CycloNum& operator*=(const Rat& s);

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator-(const CycloNum& a);
    friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator*(CycloNum a, const Rat& s) { return a *= s; }
    friend CycloNum operator*(const Rat& s, CycloNum a) { return a *= s; }
    friend bool operator==(const CycloNum& a, const CycloNum& b);
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

private:
    unsigned order_;
    std::vector<Rat> coeffs_;
};

// Reduced textual form: a plain rational when the value is rational,
// otherwise a polynomial in z = zeta_order.
std::string to_string(const CycloNum& a);

}  // namespace verlinde

#endif
