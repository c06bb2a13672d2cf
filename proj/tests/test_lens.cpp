#include <doctest.h>

#include "fareyplumb/lens.hpp"
#include "oracles.hpp"

using namespace fareyplumb;

TEST_CASE("cf_evaluate examples") {
    CHECK(cf_evaluate(Chain({6, 5, 4})) == Fraction{110, 19});
    for (Int p = 2; p <= 30; ++p) CHECK(cf_evaluate(Chain(std::vector<Int>(static_cast<std::size_t>(p - 1), 2))) == Fraction{p, p - 1});
    for (Int n = 1; n <= 30; ++n) CHECK(cf_evaluate(Chain({n})) == Fraction{n, 1});
    // Entries equal to 1 telescope.
    CHECK(cf_evaluate(Chain({1, 3})) == Fraction{2, 3});
    CHECK_THROWS_AS(cf_evaluate(Chain({1, 1, 1})), DegenerateChain);
    CHECK_THROWS_AS(Chain(std::vector<Int>{}), std::invalid_argument);
    CHECK_THROWS_AS(Chain({2, 0}), std::invalid_argument);
}

TEST_CASE("cf_evaluate agrees with top-down rational evaluation") {
    // Every chain with entries in 1..4 and length <= 5.
    for (std::size_t len = 1; len <= 5; ++len) {
        std::vector<Int> c(len, 1);
        for (;;) {
            auto expected = oracle::cf_value(c);
            if (expected) {
                // The top-down route divides by zero exactly when some trailing value vanishes.
                auto got = cf_evaluate(Chain(c));
                CHECK(got.p == static_cast<Int>(expected->num));
                CHECK(got.q == static_cast<Int>(expected->den));
            } else {
                CHECK_THROWS_AS(cf_evaluate(Chain(c)), DegenerateChain);
            }
            std::size_t i = len;
            while (i > 0 && c[i - 1] == 4) c[--i] = 1;
            if (i == 0) break;
            ++c[i - 1];
        }
    }
}

TEST_CASE("cf_expand examples") {
    CHECK(cf_expand(110, 19) == Chain({6, 5, 4}));
    CHECK(cf_expand(110, 29) == Chain({4, 5, 6}));
    CHECK(cf_expand(17, 1) == Chain({17}));
    CHECK(cf_expand(7, 6) == Chain(std::vector<Int>(6, 2)));
    CHECK_THROWS_AS(cf_expand(6, 4), std::invalid_argument);
    CHECK_THROWS_AS(cf_expand(5, 5), std::invalid_argument);
    CHECK_THROWS_AS(cf_expand(5, 0), std::invalid_argument);
}

TEST_CASE("round trip and determinants for p <= 300") {
    for (Int p = 2; p <= 300; ++p)
        for (Int q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            Chain c = cf_expand(p, q);
            for (Int e : c.entries()) CHECK(e >= 2);
            CHECK(cf_evaluate(c) == Fraction{p, q});
            LinearLattice lattice(c);
            CHECK(lattice.det() == p);
            if (c.size() <= 40) CHECK(determinant(lattice.gram()) == p);
            // q and its inverse give the reversed chain.
            CHECK(cf_expand(p, mod_inverse(q, p)) == c.reversed());
        }
}

TEST_CASE("lens_canonical") {
    auto l = lens_canonical(110, 19);
    CHECK(l.q_set() == std::vector<Int>{19, 29});
    CHECK(lens_canonical(5, 4).q_set() == std::vector<Int>{4});
    CHECK(lens_canonical(254, 139).q_set() == std::vector<Int>{53, 139});
    CHECK(lens_canonical(110, 19) == lens_canonical(110, 29));
    CHECK(!(lens_canonical(110, 19) == lens_canonical(110, 19).reversed()));
    CHECK(lens_canonical(5, 2).reversed() == lens_canonical(5, 3));
    CHECK(lens_canonical(5, 2) == lens_canonical(5, 3));  // 2 * 3 = 6 = 1 mod 5
    CHECK_THROWS_AS(lens_canonical(6, 4), std::invalid_argument);
    CHECK_THROWS_AS(lens_canonical(1, 0), std::invalid_argument);
    for (Int p = 2; p <= 60; ++p)
        for (Int q = 1; q < p; ++q)
            if (std::gcd(p, q) == 1) CHECK(lens_canonical(p, q).q_inverse() == oracle::brute_mod_inverse(q, p));
}

TEST_CASE("family_lens") {
    auto a = family_lens(4, 2);
    CHECK(a.p == 110);
    CHECK(a.q == 29);
    auto b = family_lens(5, 3);
    CHECK(b.p == 254);
    CHECK(b.q == 53);
    CHECK_THROWS_AS(family_lens(5, 2), std::invalid_argument);
    CHECK_THROWS_AS(family_lens(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(family_lens(4, 4), std::invalid_argument);
}

TEST_CASE("positive definiteness") {
    CHECK(is_positive_definite(Chain({6, 5, 4})));
    CHECK(is_positive_definite(Chain({1})));
    CHECK(!is_positive_definite(Chain({1, 1})));
    CHECK(is_positive_definite(Chain({1, 3})));
    CHECK(!is_positive_definite(Chain({1, 1, 2})));
}

TEST_CASE("text forms") {
    CHECK(parse_chain("6,5,4") == Chain({6, 5, 4}));
    CHECK(to_string(Chain({6, 5, 4})) == "6,5,4");
    CHECK(parse_lens("L(110,19)") == lens_canonical(110, 19));
    CHECK(to_string(lens_canonical(110, 19)) == "L(110,19)");
    CHECK_THROWS(parse_lens("L(110)"));
    CHECK_THROWS(parse_chain("6,,4"));
}

TEST_CASE("overflow is an error") {
    CHECK_THROWS_AS(family_lens(3000000000LL, 2), OverflowError);
    CHECK_THROWS_AS(cf_evaluate(Chain(std::vector<Int>(80, 3))), OverflowError);
}
