#include "verlinde/heisenberg.hpp"

#include <numeric>
#include <stdexcept>

#include "verlinde/numth.hpp"

namespace verlinde {

HeisElem::HeisElem(unsigned level, long long t_, long long x_, long long y_) : n(level) {
    if (n == 0) throw std::invalid_argument("Heisenberg level must be positive");
    t = static_cast<unsigned>(mod_ll(t_, 2LL * n));
    x = static_cast<unsigned>(mod_ll(x_, n));
    y = static_cast<unsigned>(mod_ll(y_, n));
}

HeisElem hmul(const HeisElem& g, const HeisElem& g2) {
    if (g.n != g2.n) throw std::invalid_argument("Heisenberg level mismatch");
    const long long n = g.n;
    long long comm = (static_cast<long long>(g2.y) * g.x) % n;
    return HeisElem(g.n, g.t + g2.t + 2 * comm, g.x + g2.x, g.y + g2.y);
}

HeisElem hinv(const HeisElem& g) {
    const long long n = g.n;
    long long c = (static_cast<long long>(g.x) * g.y) % n;
    return HeisElem(g.n, -static_cast<long long>(g.t) + 2 * c, -static_cast<long long>(g.x),
                    -static_cast<long long>(g.y));
}

HeisElem hpow(const HeisElem& g, unsigned long m) {
    HeisElem acc = heis_identity(g.n);
    for (unsigned long i = 0; i < m; ++i) acc = hmul(acc, g);
    return acc;
}

ElemOrderData order_data(const HeisElem& g) {
    ElemOrderData d;
    d.s = std::gcd(g.n, g.x);
    d.h_prime = g.n / d.s;
    d.delta = std::gcd(d.s, g.y);
    d.image_order = g.n / d.delta;
    return d;
}

std::vector<HeisElem> all_elements(unsigned n) {
    std::vector<HeisElem> out;
    out.reserve(2ull * n * n * n);
    for (unsigned t = 0; t < 2 * n; ++t)
        for (unsigned x = 0; x < n; ++x)
            for (unsigned y = 0; y < n; ++y) out.emplace_back(n, t, x, y);
    return out;
}

CycloMatrix::CycloMatrix(unsigned rows, unsigned cols, unsigned order)
    : rows_(rows), cols_(cols), order_(order), e_(static_cast<size_t>(rows) * cols, CycloNum(order)) {}

CycloMatrix CycloMatrix::identity(unsigned n, unsigned order) {
    CycloMatrix m(n, n, order);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = CycloNum::from_rational(order, 1);
    return m;
}

CycloMatrix CycloMatrix::operator*(const CycloMatrix& rhs) const {
    if (cols_ != rhs.rows_ || order_ != rhs.order_)
        throw std::invalid_argument("matrix shape or order mismatch");
    CycloMatrix out(rows_, rhs.cols_, order_);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned k = 0; k < cols_; ++k) {
            const CycloNum& a = at(i, k);
            if (a.literally_zero()) continue;
            for (unsigned j = 0; j < rhs.cols_; ++j) {
                const CycloNum& b = rhs.at(k, j);
                if (b.literally_zero()) continue;
                out.at(i, j) += a * b;
            }
        }
    return out;
}

std::vector<CycloNum> CycloMatrix::apply(const std::vector<CycloNum>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<CycloNum> out(rows_, CycloNum(order_));
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j < cols_; ++j) {
            const CycloNum& a = at(i, j);
            if (a.literally_zero() || v[j].literally_zero()) continue;
            out[i] += a * v[j];
        }
    return out;
}

CycloNum CycloMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
    CycloNum s(order_);
    for (unsigned i = 0; i < rows_; ++i) s += at(i, i);
    return s;
}

CycloMatrix CycloMatrix::pow(unsigned long m) const {
    if (rows_ != cols_) throw std::invalid_argument("power of non-square matrix");
    CycloMatrix acc = identity(rows_, order_);
    for (unsigned long i = 0; i < m; ++i) acc = acc * (*this);
    return acc;
}

bool CycloMatrix::equals(const CycloMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || order_ != rhs.order_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != rhs.e_[i]) return false;
    return true;
}

bool CycloMatrix::is_monomial() const {
    if (rows_ != cols_) return false;
    std::vector<unsigned> row_nnz(rows_, 0), col_nnz(cols_, 0);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j < cols_; ++j)
            if (!at(i, j).literally_zero()) {
                ++row_nnz[i];
                ++col_nnz[j];
            }
    for (unsigned i = 0; i < rows_; ++i)
        if (row_nnz[i] != 1 || col_nnz[i] != 1) return false;
    return true;
}

CycloNum CycloMatrix::monomial_determinant() const {
    if (!is_monomial()) throw std::invalid_argument("determinant requires a monomial matrix");
    // sigma(j) = the row carrying column j; det = sign(sigma) * prod entries
    std::vector<unsigned> sigma(cols_);
    CycloNum prod = CycloNum::from_rational(order_, 1);
    for (unsigned j = 0; j < cols_; ++j)
        for (unsigned i = 0; i < rows_; ++i)
            if (!at(i, j).literally_zero()) {
                sigma[j] = i;
                prod = prod * at(i, j);
            }
    std::vector<bool> seen(cols_, false);
    int sign = 1;
    for (unsigned j = 0; j < cols_; ++j) {
        if (seen[j]) continue;
        unsigned len = 0, k = j;
        while (!seen[k]) {
            seen[k] = true;
            k = sigma[k];
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    if (sign < 0) prod *= Rat(-1);
    return prod;
}

CycloMatrix schrodinger_matrix(const HeisElem& g) {
    const unsigned n = g.n;
    CycloMatrix m(n, n, 2 * n);
    for (unsigned i = 0; i < n; ++i) {
        unsigned row = (i + n - g.x) % n;
        long long e = g.t + 2LL * g.y * row;
        m.at(row, i) = CycloNum::root_of_unity(2 * n, e);
    }
    return m;
}

std::vector<unsigned> admissible_u_exponents(const HeisElem& g) {
    const ElemOrderData d = order_data(g);
    const unsigned xp = g.x / d.s;
    const unsigned parity = (static_cast<unsigned long long>(g.y) * xp * (d.h_prime + 1)) % 2;
    const unsigned target = parity * g.n;  // (-1)^parity as a zeta_{2n} exponent
    std::vector<unsigned> out;
    for (unsigned tu = 0; tu < 2 * g.n; ++tu)
        if ((static_cast<unsigned long long>(tu) * d.h_prime) % (2 * g.n) == target) out.push_back(tu);
    return out;
}

CycloNum eigenvalue_at(const HeisElem& g, unsigned i, unsigned j) {
    const ElemOrderData d = order_data(g);
    const unsigned tu = admissible_u_exponents(g).front();
    long long e = static_cast<long long>(g.t) + tu + 2LL * g.y * i + 2LL * d.s * j;
    return CycloNum::root_of_unity(2 * g.n, e);
}

std::vector<CycloNum> eigenvalue_multiset(const HeisElem& g) {
    const ElemOrderData d = order_data(g);
    std::vector<CycloNum> out;
    out.reserve(g.n);
    for (unsigned i = 1; i <= d.s; ++i)
        for (unsigned j = 1; j <= d.h_prime; ++j) out.push_back(eigenvalue_at(g, i, j));
    return out;
}

std::vector<CycloNum> closed_form_eigenvector(const HeisElem& g, unsigned i, unsigned j) {
    const unsigned n = g.n;
    const ElemOrderData d = order_data(g);
    const unsigned tu = admissible_u_exponents(g).front();
    // lambda for the alpha = 1 part of g; the central factor scales the
    // eigenvalue but not the eigenvector.
    const long long lam0 = tu + 2LL * g.y * i + 2LL * d.s * j;
    std::vector<CycloNum> v(n, CycloNum(2 * n));
    for (unsigned k = 0; k < d.h_prime; ++k) {
        long long tri = static_cast<long long>(k) * (k + 1) / 2;
        long long zy_exp = 2LL * g.y * (static_cast<long long>(k) * i - tri * g.x);
        long long e = -lam0 * k + zy_exp;
        unsigned idx = static_cast<unsigned>(mod_ll(static_cast<long long>(i) - static_cast<long long>(k) * g.x, n));
        v[idx] += CycloNum::root_of_unity(2 * n, e);
    }
    return v;
}

}  // namespace verlinde
