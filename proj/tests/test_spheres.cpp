#include <doctest.h>

#include <numeric>
#include <random>
#include <sstream>

#include "fareyplumb/spheres.hpp"
#include "oracles.hpp"

using namespace fareyplumb;

TEST_CASE("fully smoothed ring sphere has square 5n - 1") {
    for (std::size_t n = 1; n <= 8; ++n)
        for (const auto& p : enumerate_paths(n)) {
            auto c = build(p);
            CHECK(max_smoothed_square(c) == 5 * static_cast<Int>(n) - 1);
            auto spheres = smoothed_spheres(c);
            REQUIRE(!spheres.empty());
            Int total = std::accumulate(c.squares().begin(), c.squares().end(), Int{0});
            for (const auto& s : spheres) {
                CHECK(c.squares()[s.removed] == 1);
                // n + 1 spheres left, n positive smoothings.
                CHECK(s.square == total - 1 + 2 * static_cast<Int>(n));
                CHECK(norm(s.sphere_class) == s.square);
            }
        }
}

TEST_CASE("twist concordance squares") {
    CHECK(twist_concordance_square(0) == 0);
    CHECK(twist_concordance_square(1) == 9);
    CHECK(twist_concordance_square(2) == 10);
    CHECK(twist_concordance_square(4) == 20);
    CHECK(twist_concordance_square(8) == 40);
    for (Int m = 1; m <= 25; ++m) CHECK(twist_concordance_square(4 * m) == 20 * m);
    Int running = 0;
    for (Int m = 1; m <= 40; ++m) {
        running += (m % 2 == 0) ? 1 : 9;
        CHECK(twist_concordance_square(m) == running);
    }
    CHECK_THROWS(twist_concordance_square(-1));
}

TEST_CASE("characteristic vectors") {
    CHECK(is_characteristic(IntVector{1, 1, 3, 3}));
    CHECK(!is_characteristic(IntVector{1, 2}));
    CHECK(is_characteristic(IntVector{-1, 5}));
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> len(1, 4), val(-6, 6);
    for (int trial = 0; trial < 300; ++trial) {
        IntVector v(static_cast<std::size_t>(len(rng)));
        for (auto& x : v.coords) x = val(rng);
        CHECK(is_characteristic(v) == oracle::brute_characteristic(v));
    }
}

TEST_CASE("pairing bound") {
    CHECK(pairing_bound_check(IntVector{1, 1, 3, 3}, 2));
    // e_3 has square 1 and pairs 3 with (1,1,3,3).
    CHECK(!pairing_bound_check(IntVector{1, 1, 3, 3}, 3));
    CHECK(!pairing_bound_check(IntVector{2}, 2));
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> len(1, 3), val(-4, 4), tt(0, 4);
    for (int trial = 0; trial < 200; ++trial) {
        IntVector v(static_cast<std::size_t>(len(rng)));
        for (auto& x : v.coords) x = val(rng);
        Int t = tt(rng);
        CHECK(pairing_bound_check(v, t) == oracle::brute_pairing_bound(v, t));
    }
}

TEST_CASE("Petersen graphs") {
    auto p = petersen();
    CHECK(p.vertex_count() == 10);
    CHECK(p.edge_count() == 15);
    for (std::size_t v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
    CHECK(!is_bipartite(p));

    auto g = subdivided_petersen();
    CHECK(g.vertex_count() == 25);
    CHECK(g.edge_count() == 30);
    for (std::size_t v = 0; v < 10; ++v) CHECK(g.degree(v) == 3);
    for (std::size_t v = 10; v < 25; ++v) CHECK(g.degree(v) == 2);
    CHECK(is_bipartite(g));
}

TEST_CASE("induced paths in the subdivided Petersen graph") {
    auto g = subdivided_petersen();
    auto w = find_induced_path(g, 19);
    REQUIRE(w);
    CHECK(w->size() == 19);
    CHECK(is_induced_path(g, *w));
    CHECK(!find_induced_path(g, 20));
    CHECK(count_induced_paths(g, 19) == 120);
    CHECK(count_induced_paths(g, 20) == 0);
}

TEST_CASE("induced path edge cases") {
    SimpleGraph k4(4);
    for (std::size_t u = 0; u < 4; ++u)
        for (std::size_t v = u + 1; v < 4; ++v) k4.add_edge(u, v);
    CHECK(!find_induced_path(k4, 3));
    CHECK(find_induced_path(k4, 2));
    CHECK(count_induced_paths(k4, 1) == 4);
    CHECK(count_induced_paths(k4, 2) == 6);
    CHECK(find_induced_path(k4, 1) == std::vector<std::size_t>{0});
    CHECK(!find_induced_path(k4, 5));
    CHECK_THROWS_AS(k4.add_edge(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(k4.add_edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(k4.add_edge(0, 9), std::invalid_argument);
    CHECK(!is_induced_path(k4, {0, 1, 2}));
    CHECK(!is_induced_path(k4, {0, 0}));
}

TEST_CASE("induced path counts agree with brute force on small graphs") {
    std::mt19937 rng(3);
    std::bernoulli_distribution coin(0.35);
    for (int trial = 0; trial < 25; ++trial) {
        SimpleGraph g(7);
        for (std::size_t u = 0; u < 7; ++u)
            for (std::size_t v = u + 1; v < 7; ++v)
                if (coin(rng)) g.add_edge(u, v);
        for (std::size_t len = 1; len <= 7; ++len) {
            auto brute = oracle::brute_count_induced_paths(g, len);
            CHECK(count_induced_paths(g, len) == brute);
            auto w = find_induced_path(g, len);
            CHECK(w.has_value() == (brute > 0));
            if (w) CHECK(is_induced_path(g, *w));
        }
    }
    auto p = petersen();
    for (std::size_t len = 1; len <= 8; ++len) CHECK(count_induced_paths(p, len) == oracle::brute_count_induced_paths(p, len));
}

TEST_CASE("edge list round trip") {
    auto g = subdivided_petersen();
    std::stringstream ss;
    write_edge_list(ss, g);
    auto h = read_edge_list(ss);
    CHECK(h.vertex_count() == 25);
    CHECK(h.edges() == g.edges());

    std::istringstream in("# a triangle\n3\n\n0 1\n1 2\n# closing edge\n0 2\n");
    auto t = read_edge_list(in);
    CHECK(t.edge_count() == 3);
    std::istringstream bad("3\n0 5\n");
    CHECK_THROWS(read_edge_list(bad));
}
