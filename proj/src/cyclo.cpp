#include "verlinde/cyclo.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "verlinde/numth.hpp"

namespace verlinde {

void IntPoly::normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly{};
    std::vector<Int> c(a.coeffs.size() + b.coeffs.size() - 1, Int(0));
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return IntPoly(std::move(c));
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.coeffs.size(), b.coeffs.size()), Int(0));
    for (size_t i = 0; i < a.coeffs.size(); ++i) c[i] = a.coeffs[i];
    for (size_t i = 0; i < b.coeffs.size(); ++i) c[i] -= b.coeffs[i];
    return IntPoly(std::move(c));
}

IntPoly poly_div_exact_monic(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero() || den.coeffs.back() != 1)
        throw std::invalid_argument("divisor must be monic and nonzero");
    std::vector<Int> rem = num.coeffs;
    const long dd = den.degree();
    const long dn = num.degree();
    if (dn < dd) {
        if (!num.is_zero()) throw std::logic_error("inexact polynomial division");
        return IntPoly{};
    }
    std::vector<Int> quot(static_cast<size_t>(dn - dd) + 1, Int(0));
    for (long i = dn; i >= dd; --i) {
        Int lead = rem[static_cast<size_t>(i)];
        if (lead == 0) continue;
        quot[static_cast<size_t>(i - dd)] = lead;
        for (long j = 0; j <= dd; ++j)
            rem[static_cast<size_t>(i - dd + j)] -= lead * den.coeffs[static_cast<size_t>(j)];
    }
    for (const Int& c : rem)
        if (c != 0) throw std::logic_error("inexact polynomial division");
    return IntPoly(std::move(quot));
}

const IntPoly& cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic polynomial of order 0");
    static std::map<unsigned, IntPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // Phi_d for all d | n, ascending, so every proper divisor is ready
    // when needed.
    for (unsigned long d : divisors(n)) {
        if (cache.count(static_cast<unsigned>(d))) continue;
        std::vector<Int> xn(d + 1, Int(0));
        xn[0] = -1;
        xn[d] = 1;
        IntPoly p(std::move(xn));
        for (unsigned long e : divisors(d))
            if (e != d) p = poly_div_exact_monic(p, cache.at(static_cast<unsigned>(e)));
        cache.emplace(static_cast<unsigned>(d), std::move(p));
    }
    return cache.at(n);
}

CycloNum::CycloNum(unsigned order) : order_(order), coeffs_(order) {
    if (order == 0) throw std::invalid_argument("cyclotomic order must be positive");
}

CycloNum CycloNum::root_of_unity(unsigned n, long long e) {
    CycloNum a(n);
    a.coeffs_[static_cast<size_t>(mod_ll(e, n))] = 1;
    return a;
}

CycloNum CycloNum::from_rational(unsigned n, const Rat& v) {
    CycloNum a(n);
    a.coeffs_[0] = v;
    return a;
}

void CycloNum::add_root_multiple(long long e, const Rat& c) {
    coeffs_[static_cast<size_t>(mod_ll(e, order_))] += c;
}

bool CycloNum::literally_zero() const {
    for (const Rat& c : coeffs_)
        if (c != 0) return false;
    return true;
}

CycloNum CycloNum::reduced() const {
    const IntPoly& phi = cyclotomic_polynomial(order_);
    const size_t d = static_cast<size_t>(phi.degree());
    CycloNum out(order_);
    std::vector<Rat>& r = out.coeffs_;
    r = coeffs_;
    for (size_t i = r.size(); i-- > d;) {
        if (r[i] == 0) continue;
        Rat lead = r[i];
        r[i] = 0;
        // subtract lead * x^(i-d) * (phi - x^d); phi is monic
        for (size_t j = 0; j < d; ++j) r[i - d + j] -= lead * phi.coeffs[j];
    }
    return out;
}

std::optional<Rat> CycloNum::to_rational() const {
    CycloNum c = reduced();
    for (size_t i = 1; i < c.coeffs_.size(); ++i)
        if (c.coeffs_[i] != 0) return std::nullopt;
    return c.coeffs_[0];
}

bool CycloNum::is_zero() const { return reduced().literally_zero(); }

CycloNum CycloNum::embed_into(unsigned m) const {
    if (m == 0 || m % order_ != 0)
        throw std::invalid_argument("embedding target order must be a multiple of the source order");
    const unsigned stride = m / order_;
    CycloNum out(m);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) out.coeffs_[i * stride] = coeffs_[i];
    return out;
}

CycloNum CycloNum::pow(unsigned long k) const {
    CycloNum acc = from_rational(order_, 1);
    CycloNum base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

CycloNum& CycloNum::operator+=(const CycloNum& rhs) {
    if (order_ != rhs.order_) throw std::invalid_argument("cyclotomic order mismatch");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& rhs) {
    if (order_ != rhs.order_) throw std::invalid_argument("cyclotomic order mismatch");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CycloNum& CycloNum::operator*=(const Rat& s) {
    for (Rat& c : coeffs_) c *= s;
    return *this;
}

CycloNum operator-(const CycloNum& a) {
    CycloNum out(a.order_);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) out.coeffs_[i] = -a.coeffs_[i];
    return out;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
    if (a.order_ != b.order_) throw std::invalid_argument("cyclotomic order mismatch");
    const unsigned n = a.order_;
    CycloNum out(n);
    for (size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) {
            if (b.coeffs_[j] == 0) continue;
            size_t k = i + j;
            if (k >= n) k -= n;
            out.coeffs_[k] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
    if (a.order_ != b.order_) throw std::invalid_argument("cyclotomic order mismatch");
    CycloNum d = a;
    d -= b;
    return d.is_zero();
}

std::string to_string(const CycloNum& a) {
    if (auto r = a.to_rational()) return rat_to_string(*r);
    CycloNum c = a.reduced();
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c.coeffs().size(); ++i) {
        const Rat& v = c.coeffs()[i];
        if (v == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << rat_to_string(v);
            continue;
        }
        if (v != 1) os << "(" << rat_to_string(v) << ")*";
        os << "z";
        if (i > 1) os << "^" << i;
    }
    os << "  [z = zeta_" << a.order() << "]";
    return os.str();
}

}  // namespace verlinde
