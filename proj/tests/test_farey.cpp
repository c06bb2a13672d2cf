#include <doctest.h>

#include <fstream>
#include <set>

#include "fareyplumb/farey.hpp"
#include "oracles.hpp"

using namespace fareyplumb;

TEST_CASE("slope validation and order") {
    CHECK_THROWS_AS(Slope(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(Slope(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(Slope(-1, 2), std::invalid_argument);
    CHECK(Slope(1, 2) < Slope(2, 3));
    CHECK(Slope(1000, 1) < Slope::infinity());
    CHECK(Slope::zero() < Slope(1, 1000));
    CHECK(parse_slope("2/3") == Slope(2, 3));
    CHECK(to_string(Slope::infinity()) == "1/0");
}

TEST_CASE("distance") {
    CHECK(distance(Slope::zero(), Slope::infinity()) == 1);
    CHECK(distance(Slope(1, 2), Slope(2, 3)) == 1);
    for (Int n = 1; n < 50; ++n) CHECK(distance(Slope::zero(), Slope(n, 1)) == n);
}

TEST_CASE("parents") {
    CHECK(parents(Slope(1, 1)) == Parents{Slope::zero(), Slope::infinity()});
    CHECK(parents(Slope(2, 1)) == Parents{Slope(1, 1), Slope::infinity()});
    CHECK(parents(Slope(2, 3)) == Parents{Slope(1, 2), Slope(1, 1)});
    CHECK_THROWS_AS(parents(Slope::zero()), std::invalid_argument);
    CHECK_THROWS_AS(parents(Slope::infinity()), std::invalid_argument);
    // Large partial quotients take the jump path.
    CHECK(parents(Slope(1000000, 1)) == Parents{Slope(999999, 1), Slope::infinity()});
    CHECK(parents(Slope(1, 1000000)) == Parents{Slope::zero(), Slope(1, 999999)});
}

TEST_CASE("parents agree with brute force for num, den <= 20") {
    // Parents of a slope have smaller entries, so a box of 20 is enough.
    for (const auto& s : oracle::slopes_up_to(20)) {
        if (s.is_zero() || s.is_infinity()) continue;
        auto brute = oracle::brute_parents(s, 20);
        REQUIRE(brute.has_value());
        Parents p = parents(s);
        CHECK(p.left == brute->first);
        CHECK(p.right == brute->second);
    }
}

TEST_CASE("validate_path error kinds") {
    auto kind_of = [](const char* text) {
        try {
            parse_path(text);
        } catch (const PathError& e) {
            return e.kind();
        }
        FAIL("expected PathError");
        return PathErrorKind::WrongEndpoints;
    };
    CHECK(parse_path("0/1,1/1,1/0").n() == 1);
    CHECK(parse_path("0/1,1/1,2/1,1/0").n() == 2);
    CHECK(kind_of("0/1,2/3,1/0") == PathErrorKind::NotNeighbors);
    CHECK(kind_of("0/1,1/0") == PathErrorKind::NoInteriorSlopes);
    CHECK(kind_of("1/1,1/0") == PathErrorKind::WrongEndpoints);
    CHECK(kind_of("0/1,1/1") == PathErrorKind::WrongEndpoints);
    CHECK(kind_of("0/1,1/1,1/2,1/0") == PathErrorKind::NotIncreasing);
}

TEST_CASE("enumerate_paths small cases") {
    auto one = enumerate_paths(1);
    REQUIRE(one.size() == 1);
    CHECK(to_string(one[0]) == "0/1,1/1,1/0");
    auto two = enumerate_paths(2);
    REQUIRE(two.size() == 2);
    CHECK(to_string(two[0]) == "0/1,1/2,1/1,1/0");
    CHECK(to_string(two[1]) == "0/1,1/1,2/1,1/0");
    CHECK_THROWS_AS(enumerate_paths(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_paths(13), std::length_error);
    CHECK_THROWS_AS(enumerate_paths(5, 4), std::length_error);
}

TEST_CASE("enumerate_paths matches the mediant-split oracle and golden counts") {
    std::ifstream golden(FAREYPLUMB_GOLDEN_DIR "/path_counts.txt");
    REQUIRE(golden);
    std::size_t n;
    std::uint64_t expected;
    std::size_t checked = 0;
    while (golden >> n >> expected) {
        auto paths = enumerate_paths(n);
        CHECK(paths.size() == expected);
        CHECK(oracle::catalan(n) == expected);
        auto split = oracle::split_paths(Slope::zero(), Slope::infinity(), n);
        REQUIRE(split.size() == paths.size());
        for (std::size_t i = 0; i < paths.size(); ++i) CHECK(paths[i].slopes() == split[i]);
        CHECK(std::is_sorted(paths.begin(), paths.end()));
        ++checked;
    }
    CHECK(checked == 8);
}

TEST_CASE("mediants of consecutive slopes are neighbours of both") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& p : enumerate_paths(n))
            for (std::size_t i = 0; i + 1 < p.size(); ++i) {
                Slope m = mediant(p[i], p[i + 1]);
                CHECK(distance(p[i], m) == 1);
                CHECK(distance(m, p[i + 1]) == 1);
            }
}

TEST_CASE("paths for n+1 containing a path are its single-mediant insertions") {
    auto bigger = enumerate_paths(6);
    for (const auto& p : enumerate_paths(5)) {
        std::set<std::vector<Slope>> supersets, insertions;
        for (const auto& q : bigger)
            if (std::includes(q.slopes().begin(), q.slopes().end(), p.slopes().begin(), p.slopes().end()))
                supersets.insert(q.slopes());
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            auto s = p.slopes();
            s.insert(s.begin() + static_cast<std::ptrdiff_t>(i) + 1, mediant(p[i], p[i + 1]));
            insertions.insert(s);
        }
        CHECK(supersets == insertions);
    }
}

TEST_CASE("path text round trip") {
    for (const auto& p : enumerate_paths(4)) CHECK(parse_path(to_string(p)) == p);
    CHECK_THROWS(parse_slope("3"));
    CHECK_THROWS(parse_slope("a/b"));
}
