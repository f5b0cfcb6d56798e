#include <catch2/catch_amalgamated.hpp>

#include <specht/special.hpp>

#include "oracles.hpp"

using namespace specht;

TEST_CASE("p-special base cases") {
    CHECK(is_p_special(0, 0, 2));
    CHECK(is_p_special(0, 0, 0));
    CHECK_FALSE(is_p_special(0, 1, 2));
    CHECK_FALSE(is_p_special(0, -3, 5));
    CHECK_FALSE(is_p_special(2, 1, 2));
    for (long long j = 1; j <= 12; ++j)
        CHECK(is_p_special((1LL << j) - 1, 1, 2));
}

TEST_CASE("p-special argument validation") {
    CHECK_THROWS_AS(is_p_special(-1, 0, 2), domain_error);
    CHECK_THROWS_AS(is_p_special(3, 1, 4), domain_error);
    CHECK_THROWS_AS(is_p_special(3, 1, 1), domain_error);
    CHECK_THROWS_AS(SpecialParams(1, 2), domain_error);
    CHECK_THROWS_AS(SpecialParams(2, 6), domain_error);
}

TEST_CASE("p-special symmetry and support") {
    for (long long p : {0LL, 2LL, 3LL, 5LL})
        for (long long r = 0; r <= 40; ++r)
            for (long long b = -r - 2; b <= r + 2; ++b) {
                bool s = is_p_special(r, b, p);
                CHECK(s == is_p_special(r, -b, p));
                if (s) {
                    CHECK(std::abs(b) <= r);
                    CHECK((r - b) % 2 == 0);
                }
            }
}

TEST_CASE("recursion agrees with digit-vector enumeration") {
    for (long long p : {2LL, 3LL, 5LL})
        for (long long r = 0; r <= 120; ++r)
            for (long long b = -r; b <= r; ++b)
                REQUIRE(is_p_special(r, b, p) == oracles::p_special_brute(r, b, p));
}

TEST_CASE("characteristic zero counts the full weight string") {
    for (long long r = 0; r <= 80; ++r) {
        long long count = 0;
        for (long long b = -r; b <= r; ++b)
            if (is_p_special(r, b, 0))
                ++count;
        CHECK(count == r + 1);
    }
}

TEST_CASE("quantum-layer peeling") {
    CHECK(is_lp_special(1, 1, SpecialParams(2, 2)));
    CHECK_FALSE(is_lp_special(2, 0, SpecialParams(2, 2)));
    for (int p : {0, 2, 3, 5})
        CHECK(is_lp_special(2, 0, SpecialParams(3, p)));
    CHECK_THROWS_AS(is_lp_special(-1, 0, SpecialParams(2, 2)), domain_error);
}

TEST_CASE("two-part enumeration") {
    auto list = enumerate_special_two_part(2, 1, 2);
    REQUIRE(list.size() == 2);
    CHECK(list[0] == Partition({3}));
    CHECK(list[1] == Partition({2, 1}));

    CHECK(enumerate_special_two_part(0, 0, 2) == std::vector<Partition>{Partition{}});
    CHECK(enumerate_special_two_part(1, 0, 0) == std::vector<Partition>{Partition({1})});
}

TEST_CASE("two-part enumeration yields sorted duplicate-free partitions") {
    for (long long p : {0LL, 2LL, 3LL})
        for (long long u = 0; u <= 9; ++u)
            for (long long v = 0; v <= 9; ++v) {
                auto list = enumerate_special_two_part(u, v, p);
                for (std::size_t i = 0; i < list.size(); ++i) {
                    CHECK(list[i].length() <= 2);
                    CHECK(list[i].degree() == u + v);
                    if (i > 0)
                        CHECK(list[i].part(0) < list[i - 1].part(0));
                }
            }
}
