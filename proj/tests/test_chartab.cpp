#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "verlinde/chartab.hpp"

using namespace verlinde;

TEST_CASE("symmetric-power oracle basics") {
    CHECK(sym_trace_oracle(3, 0, heis_identity(3)) == CycloNum::from_rational(6, 1));
    for (unsigned n = 1; n <= 5; ++n)
        for (unsigned K = 0; K <= 5; ++K)
            CHECK(sym_trace_oracle(n, K, heis_identity(n)) ==
                  CycloNum::from_rational(2 * n, Rat(binomial(K + n - 1, n - 1))));
    // h_4 of the dual eigenvalues {1, -1}
    CHECK(sym_trace_oracle(2, 4, HeisElem(2, 0, 0, 1)) == CycloNum::from_rational(4, 1));
}

TEST_CASE("Newton path equals the direct monomial-basis path") {
    for (unsigned n = 1; n <= 12; ++n)
        for (unsigned K = 0; n * K <= 12; ++K)
            for (const HeisElem& g : all_elements(n))
                REQUIRE(sym_trace_direct(n, K, g) == sym_trace_oracle(n, K, g));
    CHECK_THROWS_AS(sym_trace_direct(4, 4, heis_identity(4)), std::invalid_argument);
}

TEST_CASE("support law of the symmetric-power trace") {
    for (unsigned n = 1; n <= 6; ++n)
        for (const HeisElem& g : all_elements(n)) {
            const unsigned ord = order_data(g).image_order;
            for (unsigned K = 1; K <= 8; ++K)
                REQUIRE(sym_trace_oracle(n, K, g).is_zero() == (K % ord != 0));
        }
}

TEST_CASE("centrality of the symmetric-power trace") {
    for (unsigned n = 1; n <= 4; ++n)
        for (const HeisElem& g : all_elements(n))
            for (unsigned K = 1; K <= 4; ++K) {
                const CycloNum base = sym_trace_oracle(n, K, HeisElem(n, 0, g.x, g.y));
                const CycloNum scaled =
                    CycloNum::root_of_unity(2 * n, -static_cast<long long>(g.t) * K) * base;
                REQUIRE(sym_trace_oracle(n, K, g) == scaled);
            }
}

TEST_CASE("closed M_k traces") {
    CHECK(mk_trace_closed(2, 2, heis_identity(2)) == Rat(3));  // dim Sym^2(C^2)
    CHECK(mk_trace_closed(2, 2, HeisElem(2, 0, 1, 1)) == Rat(-1));
    CHECK(mk_trace_closed(2, 3, HeisElem(2, 0, 0, 1)) == Rat(1));
    CHECK_THROWS_AS(mk_trace_closed(2, 1, heis_identity(2)), std::invalid_argument);

    // independent of the central part
    for (unsigned t = 0; t < 4; ++t)
        CHECK(mk_trace_closed(2, 2, HeisElem(2, t, 1, 0)) ==
              mk_trace_closed(2, 2, HeisElem(2, 0, 1, 0)));
}

TEST_CASE("closed trace equals oracle trace on M_k") {
    for (unsigned h = 1; h <= 3; ++h)
        for (unsigned q = 2; q <= 3; ++q) {
            const auto table = mk_oracle_trace_table(h, q);
            for (const HeisElem& g : all_elements(h))
                REQUIRE(table[heis_index(g)] ==
                        CycloNum::from_rational(2 * h, mk_trace_closed(h, q, g)));
        }
}

TEST_CASE("wedge traces") {
    CHECK(wedge_trace(heis_identity(5)) == CycloNum::from_rational(10, 1));
    CHECK(wedge_trace(HeisElem(2, 0, 1, 0)) == CycloNum::from_rational(4, -1));
    CHECK(wedge_trace(HeisElem(3, 0, 1, 1)) == CycloNum::from_rational(6, 1));
}

TEST_CASE("closed symmetric-power traces at level hr") {
    // identity gives the dimension
    for (unsigned h = 1; h <= 3; ++h)
        for (unsigned r = 1; r <= 2; ++r)
            for (unsigned k = 1; k <= 2; ++k) {
                if (std::gcd(r, k) != 1) continue;
                const unsigned n = h * r;
                CHECK(symhk_trace_closed(h, r, k, heis_identity(n)) ==
                      CycloNum::from_rational(2 * n, Rat(binomial(h * k + n - 1, n - 1))));
            }
    // off the h-torsion subgroup the trace vanishes
    CHECK(symhk_trace_closed(2, 2, 1, HeisElem(4, 0, 1, 0)).is_zero());
    CHECK(symhk_trace_closed(2, 1, 1, HeisElem(2, 0, 1, 1)) == CycloNum::from_rational(4, -1));
    CHECK_THROWS_AS(symhk_trace_closed(2, 2, 2, heis_identity(4)), std::invalid_argument);
}

TEST_CASE("closed symmetric-power trace equals the oracle everywhere") {
    for (unsigned h = 1; h <= 6; ++h)
        for (unsigned r = 1; h * r <= 6; ++r)
            for (unsigned k = 1; k <= 3; ++k) {
                if (std::gcd(r, k) != 1) continue;
                const unsigned n = h * r;
                for (const HeisElem& g : all_elements(n))
                    REQUIRE(symhk_trace_closed(h, r, k, g) == sym_trace_oracle(n, h * k, g));
            }
}

TEST_CASE("Schulte traces") {
    CHECK(schulte_trace(2, 3, 1, heis_identity(6)) == CycloNum::from_rational(12, 3));
    CHECK(schulte_trace(2, 2, 1, HeisElem(4, 0, 1, 1)).is_zero());
    CHECK(schulte_trace(2, 1, 1, HeisElem(2, 0, 1, 1)) == CycloNum::from_rational(4, 1));
    CHECK_THROWS_AS(schulte_trace(2, 2, 4, heis_identity(4)), std::invalid_argument);
}

TEST_CASE("trace dispatch by descriptor") {
    RepDescriptor rep;
    rep.kind = RepDescriptor::Kind::SymDual;
    rep.level = 2;
    rep.K = 4;
    CHECK(rep_trace(rep, HeisElem(2, 0, 0, 1)) == CycloNum::from_rational(4, 1));

    rep.kind = RepDescriptor::Kind::Mk;
    rep.level = rep.h = 2;
    rep.q = 2;
    CHECK(rep_trace(rep, HeisElem(2, 0, 1, 1)) == CycloNum::from_rational(4, -1));

    rep.kind = RepDescriptor::Kind::WedgeTop;
    CHECK(rep_trace(rep, HeisElem(2, 0, 1, 0)) == CycloNum::from_rational(4, -1));

    rep.kind = RepDescriptor::Kind::SchulteR;
    rep.level = 2;
    rep.sh = 2;
    rep.sr = 1;
    rep.sk = 1;
    CHECK(rep_trace(rep, HeisElem(2, 0, 1, 1)) == CycloNum::from_rational(4, 1));
}
