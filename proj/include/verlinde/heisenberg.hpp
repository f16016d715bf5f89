#ifndef VERLINDE_HEISENBERG_HPP
#define VERLINDE_HEISENBERG_HPP

#include <cstddef>
#include <vector>

#include "verlinde/cyclo.hpp"

namespace verlinde {

// Element (alpha, x, y) of the finite Theta group H_n, with the central
// part stored as the exponent t of alpha = zeta_{2n}^t. |H_n| = 2n^3.
struct HeisElem {
    unsigned n;  // level
    unsigned t;  // alpha exponent, mod 2n
    unsigned x;  // mod n
    unsigned y;  // mod n

    HeisElem(unsigned level, long long t_, long long x_, long long y_);

    friend bool operator==(const HeisElem&, const HeisElem&) = default;
};

inline HeisElem heis_identity(unsigned n) { return HeisElem(n, 0, 0, 0); }

// (a,x,y)(a',x',y') = (a a' zeta^{y'x}, x+x', y+y'); the commutator
// exponent doubles because zeta_n = zeta_{2n}^2.
HeisElem hmul(const HeisElem& g, const HeisElem& g2);
HeisElem hinv(const HeisElem& g);
HeisElem hpow(const HeisElem& g, unsigned long m);

// s = gcd(n,x), h' = n/s, delta = gcd(n,x,y), image_order = n/delta
// (order of the image of g in X_n), with gcd(n,0) = n.
struct ElemOrderData {
    unsigned s;
    unsigned h_prime;
    unsigned delta;
    unsigned image_order;
};

ElemOrderData order_data(const HeisElem& g);

// All 2n^3 elements, ordered by (t, x, y); heis_index inverts this.
std::vector<HeisElem> all_elements(unsigned n);
inline size_t heis_index(const HeisElem& g) {
    return (static_cast<size_t>(g.t) * g.n + g.x) * g.n + g.y;
}

// Dense matrix over one cyclotomic order. Multiplication skips stored
// zeros, so products of monomial matrices stay cheap.
class CycloMatrix {
public:
    CycloMatrix(unsigned rows, unsigned cols, unsigned order);
    static CycloMatrix identity(unsigned n, unsigned order);

    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }
    unsigned order() const { return order_; }

    CycloNum& at(unsigned i, unsigned j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const CycloNum& at(unsigned i, unsigned j) const {
        return e_[static_cast<size_t>(i) * cols_ + j];
    }

    CycloMatrix operator*(const CycloMatrix& rhs) const;
    std::vector<CycloNum> apply(const std::vector<CycloNum>& v) const;
    CycloNum trace() const;
    CycloMatrix pow(unsigned long m) const;
    bool equals(const CycloMatrix& rhs) const;  // canonical, entry-wise

    bool is_monomial() const;  // exactly one nonzero entry per row and column
    CycloNum monomial_determinant() const;

private:
    unsigned rows_, cols_, order_;
    std::vector<CycloNum> e_;
};

// The Schroedinger representation: column i holds the image of the
// basis function f_i, i.e. entry (i-x mod n, i) = alpha zeta^{y(i-x)}.
// Entries live in Q(zeta_{2n}); g -> matrix is a group homomorphism.
CycloMatrix schrodinger_matrix(const HeisElem& g);

// All n eigenvalues of schrodinger_matrix(g), as exponents would give
// lambda_{i,j} = alpha u zeta_y^i sigma^j, 1<=i<=s, 1<=j<=h', with the
// smallest admissible u-exponent; the multiset does not depend on that
// choice.
std::vector<CycloNum> eigenvalue_multiset(const HeisElem& g);

// Every exponent t_u in [0, 2n) with (zeta_{2n}^{t_u})^{h'} = (-1)^{y x'(h'+1)}.
std::vector<unsigned> admissible_u_exponents(const HeisElem& g);

// Eigenvector of lambda_{i,j} from the closed-form construction,
// v = sum_k lambda^{-k} zeta_y^{ki - k(k+1)x/2} f_{i-kx}; used by tests
// to certify the eigenvalue formula.
std::vector<CycloNum> closed_form_eigenvector(const HeisElem& g, unsigned i, unsigned j);
CycloNum eigenvalue_at(const HeisElem& g, unsigned i, unsigned j);

}  // namespace verlinde

#endif
