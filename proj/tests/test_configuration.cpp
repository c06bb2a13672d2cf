#include <doctest.h>

#include <numeric>

#include "fareyplumb/configuration.hpp"
#include "fareyplumb/json.hpp"

using namespace fareyplumb;

TEST_CASE("n = 1: three complex lines") {
    auto c = build(parse_path("0/1,1/1,1/0"));
    CHECK(c.squares() == std::vector<Int>{1, 1, 1});
    CHECK(c.sphere_class(0) == IntVector{1});
    CHECK(c.sphere_class(1) == IntVector{-1});
    CHECK(c.sphere_class(2) == IntVector{1});
}

TEST_CASE("n = 2 path 0/1,1/1,2/1,1/0") {
    auto c = build(parse_path("0/1,1/1,2/1,1/0"));
    CHECK(c.squares() == std::vector<Int>{1, 2, 1, 2});
    CHECK(c.sphere_class(0) == IntVector{1, 0});
    CHECK(c.sphere_class(1) == IntVector{-1, 1});
    CHECK(c.sphere_class(2) == IntVector{0, -1});
    CHECK(c.sphere_class(3) == IntVector{1, 1});
    CHECK(c.pairing(2, 1) == 1);
    CHECK(c.pairing(2, 0) == 0);
    CHECK(c.parent_indices(2) == std::pair<std::size_t, std::size_t>{1, 3});
}

TEST_CASE("integer family: squares and w-vectors") {
    for (std::size_t n = 2; n <= 12; ++n) {
        auto c = build(integer_family_path(n));
        std::vector<Int> expected{1};
        for (std::size_t i = 1; i < n; ++i) expected.push_back(2);
        expected.push_back(1);
        expected.push_back(static_cast<Int>(n));
        CHECK(c.squares() == expected);
        for (std::size_t i = 1; i <= n; ++i) {
            IntVector w(n);
            for (std::size_t m = 0; m < i; ++m) w[m] = 1;
            CHECK(c.w(i) == w);
        }
    }
}

TEST_CASE("weight_components") {
    auto fam = build(integer_family_path(5));
    CHECK(weight_components(fam, 3) == std::vector<Int>{1, 1, 1});
    CHECK(weight_components(fam, 1) == std::vector<Int>{1});
    auto c = build(parse_path("0/1,1/2,1/1,1/0"));
    CHECK(weight_components(c, 1) == std::vector<Int>{1, 1});  // slope 1/2
    CHECK(weight_components(c, 2) == std::vector<Int>{1});     // slope 1/1
    CHECK_THROWS_AS(weight_components(c, 0), std::out_of_range);
    CHECK_THROWS_AS(weight_components(c, 3), std::out_of_range);
}

TEST_CASE("every configuration up to n = 8 passes its own verification") {
    for (std::size_t n = 1; n <= 8; ++n)
        for (const auto& p : enumerate_paths(n)) {
            auto c = build(p);  // build() runs verify()
            Int total = std::accumulate(c.squares().begin(), c.squares().end(), Int{0});
            CHECK(total == 3 * static_cast<Int>(n));
            CHECK(std::count(c.squares().begin(), c.squares().end(), 1) >= 1);
            for (std::size_t i = 0; i < c.sphere_count(); ++i) {
                CHECK(c.meridian_coeffs()[i].q == p[i].den());
                CHECK(c.meridian_coeffs()[i].p == p[i].num());
            }
        }
}

TEST_CASE("json encoding") {
    auto c = build(parse_path("0/1,1/1,2/1,1/0"));
    auto j = to_json(c);
    CHECK(j["path"] == "0/1,1/1,2/1,1/0");
    CHECK(j["squares"] == nlohmann::json({1, 2, 1, 2}));
    CHECK(j["pairing"] == nlohmann::json({{1, -1, 0, 1}, {0, 1, -1, 1}}));
    CHECK(j["w"][2] == nlohmann::json({1, 1}));
}
