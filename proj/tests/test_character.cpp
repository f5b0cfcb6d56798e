#include <catch2/catch_amalgamated.hpp>

#include <specht/character.hpp>
#include <specht/partition.hpp>
#include <specht/special.hpp>

#include "oracles.hpp"

using namespace specht;

TEST_CASE("rank-1 simple characters") {
    WeightCharacter c1 = sl2_simple_character(1, SpecialParams(2, 2));
    CHECK(c1.mult({1}) == 1);
    CHECK(c1.mult({-1}) == 1);
    CHECK(c1.dimension() == 2);

    WeightCharacter c2 = sl2_simple_character(2, SpecialParams(2, 2));
    CHECK(c2.mult({2}) == 1);
    CHECK(c2.mult({-2}) == 1);
    CHECK(c2.mult({0}) == 0);

    WeightCharacter c40 = sl2_simple_character(4, SpecialParams(2, 0));
    CHECK(c40.dimension() == 3);
    CHECK(c40.mult({4}) == 1);
    CHECK(c40.mult({0}) == 1);
    CHECK(c40.mult({-4}) == 1);
    CHECK(c40.mult({2}) == 0);
    CHECK_THROWS_AS(sl2_simple_character(-1, SpecialParams(2, 2)), domain_error);
}

TEST_CASE("rank-1 characters are symmetric with highest weight multiplicity one") {
    for (auto [l, p] : std::vector<std::pair<int, int>>{{2, 0}, {2, 2}, {2, 3}, {3, 2}, {3, 0}})
        for (long long r = 0; r <= 50; ++r) {
            WeightCharacter chi = sl2_simple_character(r, SpecialParams(l, p));
            CHECK(chi.mult({static_cast<int>(r)}) == 1);
            for (const auto& [w, m] : chi.weights()) {
                CHECK(chi.mult({-w[0]}) == m);
                CHECK(std::abs(w[0]) <= r);
            }
        }
}

TEST_CASE("rank-2 weight multiplicities") {
    CHECK(gl2_weight_mult(1, 0, 1, 0, SpecialParams(2, 2)) == 1);
    CHECK(gl2_weight_mult(2, 0, 1, 1, SpecialParams(2, 2)) == 0);
    CHECK(gl2_weight_mult(3, 2, 2, 3, SpecialParams(2, 2)) == 1);
    CHECK_THROWS_AS(gl2_weight_mult(2, 0, 1, 0, SpecialParams(2, 2)), precondition_error);
    CHECK_THROWS_AS(gl2_weight_mult(0, 1, 1, 0, SpecialParams(2, 2)), precondition_error);
}

TEST_CASE("rank-2 multiplicities match the rank-1 tensor factorisation") {
    for (auto [l, p] : std::vector<std::pair<int, int>>{{2, 0}, {2, 2}, {2, 3}, {3, 2}, {3, 0}}) {
        SpecialParams params(l, p);
        for (long long c = 0; c <= 40; ++c)
            for (long long d = 0; d <= c; ++d) {
                WeightCharacter chi = sl2_simple_character(c - d, params);
                for (long long a = 0; a <= c + d; ++a) {
                    long long b = c + d - a;
                    long long expected = chi.mult({static_cast<int>(a - b)});
                    REQUIRE(gl2_weight_mult(c, d, a, b, params) == expected);
                }
            }
    }
}

TEST_CASE("staircase weight multiplicities reduce to rank 2") {
    CHECK(staircase_weight_mult(2, 4, 3, Partition({1, 1}), SpecialParams(2, 2)) == 1);
    CHECK(staircase_weight_mult(2, 6, 3, Partition({2}), SpecialParams(2, 2)) == 0);
    for (int m = 1; m <= 4; ++m)
        for (int l : {2, 3})
            CHECK(staircase_weight_mult(m, static_cast<long long>(m) * (l - 1),
                                        static_cast<long long>(m - 1) * (l - 1), Partition{},
                                        SpecialParams(l, 2)) == 1);
    CHECK_THROWS_AS(staircase_weight_mult(2, 1, 1, Partition{}, SpecialParams(2, 2)),
                    precondition_error);
    CHECK_THROWS_AS(staircase_weight_mult(2, 4, 3, Partition({1, 1, 1}), SpecialParams(2, 2)),
                    validity_error);
}

TEST_CASE("the two staircase reduction branches agree on their common domain") {
    for (int l : {2, 3})
        for (int p : {0, 2, 3})
            for (int m = 1; m <= 5; ++m)
                for (long long a = static_cast<long long>(m) * (l - 1); a <= 40; ++a) {
                    if ((a + m) % l != 0)
                        continue;
                    for (long long b = static_cast<long long>(m - 1) * (l - 1); b <= 40; ++b) {
                        if ((b + m) % l != 1)
                            continue;
                        long long u = (a - static_cast<long long>(m) * (l - 1)) / l;
                        long long v = (b - static_cast<long long>(m - 1) * (l - 1)) / l;
                        for (long long c = u + v; 2 * c >= u + v; --c) {
                            long long d = u + v - c;
                            Partition mu({static_cast<int>(c), static_cast<int>(d)});
                            int via_reduction =
                                staircase_weight_mult(m, a, b, mu, SpecialParams(l, p));
                            int via_digits = is_p_special(c - d, u - v, p) ? 1 : 0;
                            REQUIRE(via_reduction == via_digits);
                        }
                    }
                }
}

TEST_CASE("three-row family weight multiplicities") {
    CHECK(a31b_weight_mult(14, 9, Partition({6, 5})) == 1);
    CHECK(a31b_weight_mult(6, 3, Partition({2})) == 0);
    CHECK_THROWS_AS(a31b_weight_mult(8, 3, Partition({2})), precondition_error);
    CHECK_THROWS_AS(a31b_weight_mult(6, 4, Partition({2})), precondition_error);
    CHECK_THROWS_AS(a31b_weight_mult(6, 3, Partition({2, 1, 1})), validity_error);
}

TEST_CASE("rank-3 character base cases and twists") {
    for (int p : {0, 2, 3, 5}) {
        WeightCharacter natural = gl3_simple_character(Partition({1}), p);
        CHECK(natural.dimension() == 3);
        CHECK(natural.mult({1, 0, 0}) == 1);
        CHECK(natural.mult({0, 1, 0}) == 1);
        CHECK(natural.mult({0, 0, 1}) == 1);
    }

    WeightCharacter steinberg = gl3_simple_character(Partition({2, 1}), 2);
    CHECK(steinberg.dimension() == 8);
    CHECK(steinberg == schur_weight_character(Partition({2, 1}), 3));

    WeightCharacter twisted = gl3_simple_character(Partition({2, 2}), 2);
    CHECK(twisted.dimension() == 3);
    CHECK(twisted.mult({2, 2, 0}) == 1);
    CHECK(twisted.mult({2, 0, 2}) == 1);
    CHECK(twisted.mult({0, 2, 2}) == 1);

    // characteristic zero keeps the full Schur-function character
    CHECK(gl3_simple_character(Partition({3, 1}), 0) ==
          schur_weight_character(Partition({3, 1}), 3));

    CHECK_THROWS_AS(gl3_simple_character(Partition({1, 1, 1}), 2), unsupported_base_case);
    CHECK_THROWS_AS(gl3_simple_character(Partition({2, 1}), 3), unsupported_base_case);
    CHECK_THROWS_AS(gl3_simple_character(Partition({2, 1, 1, 1}), 2), validity_error);
}

TEST_CASE("simple character weights are dominated by the highest weight") {
    for (const auto& parts : oracles::partitions_up_to(8)) {
        if (parts.size() > 2)
            continue;
        Partition mu(parts);
        Partition lambda = add_scaled(Partition{}, 2, mu);  // 2*mu, always in the base table
        WeightCharacter chi = gl3_simple_character(lambda, 2);
        CHECK(chi.mult(
                  {lambda.part(0), lambda.part(1), lambda.part(2)}) == 1);
        for (const auto& [w, m] : chi.weights()) {
            std::vector<int> sorted(w);
            std::sort(sorted.begin(), sorted.end(), std::greater<>());
            CHECK(dominance_leq(Partition(std::move(sorted)), lambda));
        }
    }
}

TEST_CASE("case formula matches the rank-3 character oracle on a small grid") {
    for (long long a : {6LL, 10LL, 14LL})
        for (long long b : {3LL, 5LL, 9LL}) {
            long long u = a / 2 - 1, v = (b - 1) / 2;
            for (long long m1 = u + v + 1; 2 * m1 >= u + v + 1; --m1) {
                long long m2 = u + v + 1 - m1;
                Partition mu({static_cast<int>(m1), static_cast<int>(m2)});
                WeightCharacter chi = gl3_simple_character(add_scaled(Partition{}, 2, mu), 2);
                long long oracle = chi.mult({static_cast<int>(a - 2), static_cast<int>(b - 1), 2}) +
                                   chi.mult({static_cast<int>(a), static_cast<int>(b - 1), 0});
                REQUIRE(a31b_weight_mult(a, b, mu) == oracle);
            }
        }
}
