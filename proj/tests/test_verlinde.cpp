#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "verlinde/numth.hpp"
#include "verlinde/sweeps.hpp"
#include "verlinde/verlinde.hpp"

using namespace verlinde;

TEST_CASE("the symbol") {
    CHECK(brace_symbol(3, 1) == Rat(1));
    CHECK(brace_symbol(1, 2) == make_rat(-1, 4));
    CHECK(brace_symbol(0, 6) == make_rat(2, 3));
    CHECK(brace_symbol(1, 4) == Rat(0));
    CHECK(brace_symbol(2, 4) == make_rat(-1, 4));
    CHECK(brace_symbol(4, 4) == make_rat(3, 4));
}

TEST_CASE("torsion character sums") {
    CHECK(torsion_sum(2, Character(2, 0, 0), 1) == Rat(3));
    CHECK(torsion_sum_brute(2, Character(2, 0, 0), 1) == Rat(3));
    CHECK(torsion_sum(2, Character(2, 1, 1), 1) == Rat(-1));
    CHECK(torsion_sum_brute(2, Character(2, 1, 1), 1) == Rat(-1));
    for (unsigned h : {1u, 2u, 3u, 6u, 8u}) {
        CHECK(torsion_sum(h, Character(h, 1, 0), h) == Rat(1));
        CHECK(torsion_sum_brute(h, Character(h, 1, 0), h) == Rat(1));
    }
    CHECK_THROWS_AS(torsion_sum(4, Character(4, 0, 0), 3), std::invalid_argument);
    CHECK_THROWS_AS(torsion_sum_brute(4, Character(4, 0, 0), 3), std::invalid_argument);

    // brute equals closed for every character, not only the diagonal ones
    for (unsigned h = 1; h <= 8; ++h)
        for (unsigned long delta : divisors(h))
            for (const Character& xi : enumerate_characters(h))
                REQUIRE(torsion_sum_brute(h, xi, static_cast<unsigned>(delta)) ==
                        torsion_sum(h, xi, static_cast<unsigned>(delta)));
}

TEST_CASE("theorem 1 multiplicities") {
    CHECK(mult_theorem1(1, 2, 1) == Rat(1));
    CHECK(mult_theorem1(1, 4, 1) == Rat(1));
    CHECK(mult_theorem1(2, 2, 1) == Rat(0));
    CHECK(mult_theorem1(2, 2, 2) == Rat(1));
    CHECK(mult_theorem1(3, 2, 1) == Rat(2));
    CHECK(mult_theorem1(3, 2, 3) == Rat(1));
    CHECK_THROWS_AS(mult_theorem1(2, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(mult_theorem1(4, 2, 3), std::invalid_argument);
}

TEST_CASE("theorem 1 character-sum oracle") {
    CHECK(mult_charsum_oracle(1, 3, Character(1, 0, 0)) == Rat(1));
    CHECK(mult_charsum_oracle(2, 2, Character(2, 0, 0)) == Rat(0));
    CHECK(mult_charsum_oracle(2, 3, Character(2, 0, 0)) == Rat(2));
    for (auto [a, b] : {std::pair{0u, 1u}, {1u, 0u}, {1u, 1u}})
        CHECK(mult_charsum_oracle(2, 3, Character(2, a, b)) == Rat(1));
    // total rank: 2 + 3*1 = 5 = (1/3) binom(6,2)
    CHECK_THROWS_AS(mult_charsum_oracle(2, 2, Character(3, 0, 0)), std::invalid_argument);
}

TEST_CASE("theorem 3 multiplicities") {
    CHECK(mult_theorem3(1, 2, 1, 1) == Rat(1));
    CHECK(mult_theorem3(1, 2, 3, 1) == Rat(2));
    CHECK(mult_theorem3(2, 1, 1, 1) == mult_theorem1(2, 2, 1));
    CHECK(mult_theorem3(2, 1, 1, 2) == mult_theorem1(2, 2, 2));
    CHECK_THROWS_AS(mult_theorem3(2, 2, 2, 1), std::invalid_argument);

    // r = 1 consistency across the board
    for (unsigned h = 1; h <= 6; ++h)
        for (unsigned q = 2; q <= 4; ++q)
            for (unsigned long omega : divisors(h))
                REQUIRE(mult_theorem3(h, 1, q - 1, static_cast<unsigned>(omega)) ==
                        mult_theorem1(h, q, static_cast<unsigned>(omega)));
}

TEST_CASE("theorem 3 character-sum oracle") {
    for (auto [r, k] : {std::pair{2u, 1u}, {1u, 2u}, {3u, 1u}})
        CHECK(mult_theorem3_charsum_oracle(1, r, k, Character(r, 0, 0)) ==
              make_rat(binomial(r + k, r), Int(r + k)));
    CHECK(mult_theorem3_charsum_oracle(2, 1, 1, Character(2, 0, 0)) == Rat(0));

    // value depends only on the restriction of chi to X_h
    const unsigned h = 2, r = 2, k = 1;
    for (unsigned a = 0; a < h; ++a)
        for (unsigned b = 0; b < h; ++b) {
            const Rat base = mult_theorem3_charsum_oracle(h, r, k, Character(h * r, a, b));
            CHECK(base == mult_theorem3_charsum_oracle(h, r, k, Character(h * r, a + h, b)));
            CHECK(base == mult_theorem3_charsum_oracle(h, r, k, Character(h * r, a, b + h)));
            CHECK(base == mult_theorem3_charsum_oracle(h, r, k, Character(h * r, a + h, b + h)));
        }
    CHECK_THROWS_AS(mult_theorem3_charsum_oracle(2, 2, 1, Character(2, 0, 0)),
                    std::invalid_argument);
}

TEST_CASE("decompositions") {
    {
        const DecompositionReport rep = decompose(2, 2);
        CHECK(rep.h == 2);
        CHECK(rep.r == 1);
        CHECK(rep.k == 1);
        CHECK(rep.q == 2u);
        CHECK(rep.line_bundle_split);
        CHECK(rep.table.entries.at(1) == Rat(0));
        CHECK(rep.table.entries.at(2) == Rat(1));
        CHECK(rep.rank_total == 3);
    }
    {
        const DecompositionReport rep = decompose(4, 2);
        CHECK(rep.h == 2);
        CHECK(rep.r == 2);
        CHECK(rep.k == 1);
        CHECK_FALSE(rep.q.has_value());
        CHECK_FALSE(rep.line_bundle_split);
        CHECK(rep.table.entries.at(1) == Rat(2));
        CHECK(rep.table.entries.at(2) == Rat(1));
        CHECK(rep.rank_total == 10);
    }
    {
        const DecompositionReport rep = decompose(2, 1);
        CHECK(rep.h == 1);
        CHECK(rep.summands.size() == 1);
        CHECK(rep.summands[0].first.rank == 2);
        CHECK(rep.summands[0].first.det_degree == 1);
        CHECK(rep.summands[0].second == Rat(1));
    }
    CHECK_THROWS_AS(decompose(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(decompose(1, 0), std::invalid_argument);
}

TEST_CASE("splitting criterion") {
    CHECK(splits_into_line_bundles(3, 6));
    CHECK_FALSE(splits_into_line_bundles(3, 5));
    for (unsigned L = 1; L <= 10; ++L) CHECK(splits_into_line_bundles(1, L));
}

TEST_CASE("tensor power bookkeeping") {
    {
        const TensorPowerShape s = tensor_power_shape(2, 1, 2);
        CHECK(s.h_prime == 1);
        CHECK(s.k_prime == 1);
        CHECK(s.count == 4);
        CHECK(s.summand_degree == 1);
    }
    {
        const TensorPowerShape s = tensor_power_shape(3, 1, 1);
        CHECK(s.h_prime == 3);
        CHECK(s.count == 1);
    }
    {
        const TensorPowerShape s = tensor_power_shape(2, 1, 3);
        CHECK(s.h_prime == 2);
        CHECK(s.count == 4);
    }
    CHECK_THROWS_AS(tensor_power_shape(2, 4, 1), std::invalid_argument);
    // rank conservation: h^k = count * h'
    for (unsigned h = 1; h <= 5; ++h)
        for (unsigned k = 0; k <= 5; ++k) {
            long d = 1;
            while (std::gcd<long long>(h, d) != 1) ++d;
            const TensorPowerShape s = tensor_power_shape(h, d, k);
            Int total;
            mpz_ui_pow_ui(total.get_mpz_t(), h, k);
            CHECK(s.count * s.h_prime == total);
            CHECK(std::gcd<long long>(s.h_prime, s.summand_degree) <= 1);
        }
}

TEST_CASE("theorem 2 wrapper") {
    const DecompositionReport base = decompose(2, 2);
    for (auto [r, d] : {std::pair{2u, 2L}, {6u, 4L}}) {
        const DecompositionReport rep = theorem2_decompose(r, d, 2, 5);
        CHECK(rep.table.entries == base.table.entries);
        CHECK(rep.theta_twist_shift == 5);
        CHECK(rep.theta_label == "Theta_{1,(det N)^2}^1");
    }
    CHECK_THROWS_AS(theorem2_decompose(2, 2, 3, 0), std::domain_error);
}

TEST_CASE("character enumeration") {
    CHECK(enumerate_characters(1).size() == 1);
    CHECK(character_order_counts(2) == std::map<unsigned, unsigned>{{1, 1}, {2, 3}});
    CHECK(character_order_counts(4) == std::map<unsigned, unsigned>{{1, 1}, {2, 3}, {4, 12}});
    for (unsigned h = 1; h <= 10; ++h) {
        unsigned total = 0;
        for (auto [omega, count] : character_order_counts(h)) {
            CHECK(h % omega == 0);
            total += count;
        }
        CHECK(total == h * h);
    }
}

TEST_CASE("orbit automorphisms") {
    {
        const Character c(5, 2, 3);
        const OrbitAutomorphism f = order_orbit_automorphism(5, c, c);
        CHECK(f.lambda == 1);
        CHECK(f.mu == 0);
        CHECK(f.nu == 0);
        CHECK(f.gamma == 1);
        CHECK(f.homomorphism_ok);
    }
    {
        const OrbitAutomorphism f = order_orbit_automorphism(2, Character(2, 1, 0), Character(2, 1, 1));
        CHECK(f.lambda == 1);
        CHECK(f.mu == 0);
        CHECK(f.nu == 1);
        CHECK(f.gamma == 1);
    }
    CHECK_THROWS_AS(order_orbit_automorphism(3, Character(3, 1, 0), Character(3, 0, 0)),
                    std::domain_error);

    // the full map, cocycle factor included, is a homomorphism on all of
    // H_h, nonzero central parts included
    for (unsigned h = 2; h <= 3; ++h) {
        const auto chars = enumerate_characters(h);
        const auto elems = all_elements(h);
        for (const Character& c1 : chars)
            for (const Character& c2 : chars) {
                if (c1.order() != c2.order()) continue;
                const OrbitAutomorphism f = order_orbit_automorphism(h, c1, c2);
                REQUIRE(f.homomorphism_ok);
                for (const HeisElem& g : elems)
                    for (const HeisElem& g2 : elems)
                        REQUIRE(f.apply(hmul(g, g2)) == hmul(f.apply(g), f.apply(g2)));
                // center fixed pointwise
                for (unsigned t = 0; t < 2 * h; ++t)
                    REQUIRE(f.apply(HeisElem(h, t, 0, 0)) == HeisElem(h, t, 0, 0));
            }
    }
}

TEST_CASE("lemma nl sweep, small bounds") {
    const SweepResult r = sweep_lemma_nl(10, 6);
    INFO(r.detail);
    CHECK(r.pass);
}

TEST_CASE("theorem sweeps, small bounds") {
    SweepResult r = sweep_theorem1(3, 3);
    INFO(r.detail);
    CHECK(r.pass);
    r = sweep_theorem3(4, 2);
    INFO(r.detail);
    CHECK(r.pass);
    r = sweep_order_orbit(4, 2, 4);
    INFO(r.detail);
    CHECK(r.pass);
}
