#include <catch2/catch_amalgamated.hpp>

#include <specht/partition.hpp>
#include <specht/schur.hpp>

#include "oracles.hpp"

using namespace specht;

namespace {

SchurSum S(std::initializer_list<int> parts) { return schur(Partition(parts)); }

/// Dense monomial expansion of a SchurSum in nvars variables.
oracles::Poly expand(const SchurSum& g, int nvars) {
    oracles::Poly out;
    for (const auto& [lambda, c] : g.terms()) {
        oracles::Poly term = oracles::schur_poly_brute(lambda.parts(), nvars);
        for (const auto& [e, k] : term) {
            out[e] += static_cast<long long>(c) * k;
            if (out[e] == 0)
                out.erase(e);
        }
    }
    return out;
}

SchurSum random_homogeneous(int degree, std::mt19937& rng) {
    SchurSum g;
    std::uniform_int_distribution<int> nterms(1, 3), coeff(1, 3);
    for (int i = nterms(rng); i > 0; --i)
        g.add(Partition(oracles::random_partition(degree, rng)), coeff(rng));
    return g;
}

} // namespace

TEST_CASE("basis embedding and coefficient lookup") {
    SchurSum g = S({2, 1});
    CHECK(g.coeff(Partition({2, 1})) == 1);
    CHECK(g.coeff(Partition({3})) == 0);
    CHECK(SchurSum::unit().coeff(Partition{}) == 1);
    CHECK(render_schur_sum(SchurSum{}) == "0");
}

TEST_CASE("column Pieri rule") {
    CHECK(pieri_column(S({4}), 3) == S({5, 1, 1}) + S({4, 1, 1, 1}));
    CHECK(pieri_column(S({3, 1}), 0) == S({3, 1}));
    CHECK(pieri_column(S({1}), 1) == S({2}) + S({1, 1}));
    CHECK(pieri_column(SchurSum::unit(), 3) == S({1, 1, 1}));
    // brute-force monomial expansion in 2 variables
    CHECK(expand(pieri_column(S({1}), 1), 2) ==
          oracles::poly_mul(oracles::schur_poly_brute({1}, 2), oracles::schur_poly_brute({1}, 2)));
}

TEST_CASE("row Pieri rule") {
    CHECK(pieri_row(S({1}), 2) == S({3}) + S({2, 1}));
    CHECK(pieri_row(S({2, 1}), 0) == S({2, 1}));
    CHECK(pieri_row(S({2, 1}), 2) == S({4, 1}) + S({3, 2}) + S({3, 1, 1}) + S({2, 2, 1}));
    // brute-force monomial expansion in 3 variables
    CHECK(expand(pieri_row(S({1}), 2), 3) ==
          oracles::poly_mul(oracles::schur_poly_brute({1}, 3), oracles::schur_poly_brute({2}, 3)));
}

TEST_CASE("Littlewood-Richardson products") {
    CHECK(lr_multiply(S({1}), S({1})) == S({2}) + S({1, 1}));
    SchurSum sq = lr_multiply(S({2, 1}), S({2, 1}));
    CHECK(sq.coeff(Partition({2, 2, 1, 1})) == 1);
    CHECK(sq.coeff(Partition({3, 2, 1})) == 2);
    CHECK(sq.coeff(Partition({2, 1, 1, 1, 1})) == 0);
    CHECK(lr_multiply(S({3, 2}), SchurSum::unit()) == S({3, 2}));
    CHECK(lr_multiply(SchurSum::unit(), S({3, 2})) == S({3, 2}));
}

TEST_CASE("LR agrees with monomial expansion on small products") {
    for (const auto& p1 : oracles::partitions_up_to(4))
        for (const auto& p2 : oracles::partitions_up_to(4)) {
            SchurSum g = schur(Partition(p1));
            SchurSum h = schur(Partition(p2));
            // enough variables that no product term is truncated away
            int nvars = static_cast<int>(p1.size() + p2.size());
            if (nvars == 0)
                nvars = 1;
            oracles::Poly lhs = oracles::poly_mul(oracles::schur_poly_brute(p1, nvars),
                                                  oracles::schur_poly_brute(p2, nvars));
            CHECK(expand(lr_multiply(g, h), nvars) == lhs);
        }
}

TEST_CASE("Pieri agrees with LR for row and column shapes") {
    for (const auto& parts : oracles::partitions_up_to(8)) {
        SchurSum g = schur(Partition(parts));
        for (int a = 0; a <= 5; ++a) {
            SchurSum row = a == 0 ? SchurSum::unit() : S({a});
            CHECK(pieri_row(g, a) == lr_multiply(g, row));
            SchurSum col = a == 0 ? SchurSum::unit()
                                  : schur(Partition(std::vector<int>(static_cast<std::size_t>(a), 1)));
            CHECK(pieri_column(g, a) == lr_multiply(g, col));
        }
    }
}

TEST_CASE("products of homogeneous sums are homogeneous of the right degree") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        SchurSum g = random_homogeneous(4, rng);
        SchurSum h = random_homogeneous(3, rng);
        SchurSum prod = lr_multiply(g, h);
        for (const auto& [lambda, c] : prod.terms())
            CHECK(lambda.degree() == 7);
    }
}

TEST_CASE("LR multiplication is commutative and associative at small degree") {
    auto small = oracles::partitions_up_to(6);
    for (const auto& p1 : small)
        for (const auto& p2 : small) {
            SchurSum g = schur(Partition(p1));
            SchurSum h = schur(Partition(p2));
            CHECK(lr_multiply(g, h) == lr_multiply(h, g));
        }
    auto tiny = oracles::partitions_up_to(4);
    for (const auto& p1 : tiny)
        for (const auto& p2 : tiny)
            for (const auto& p3 : tiny) {
                SchurSum g = schur(Partition(p1));
                SchurSum h = schur(Partition(p2));
                SchurSum k = schur(Partition(p3));
                CHECK(lr_multiply(lr_multiply(g, h), k) == lr_multiply(g, lr_multiply(h, k)));
            }
}

TEST_CASE("adapted truncation") {
    SchurSum g = S({5, 1, 1}) + S({4, 1, 1, 1});
    CHECK(truncate_adapted(g, 2) == g);
    CHECK(truncate_adapted(S({1}), 2) == SchurSum{});
    SchurSum mixed = S({3}) + S({1, 1, 1});
    CHECK(truncate_adapted(mixed, 0) == mixed);
    CHECK(truncate_adapted(mixed, 2) == S({3}));
}

TEST_CASE("adapted truncation commutes with column multiplication one level up") {
    std::mt19937 rng(7);
    for (int degree = 1; degree <= 10; ++degree)
        for (int m = 0; m <= 4; ++m)
            for (int r = 0; r <= 6; ++r) {
                SchurSum g = random_homogeneous(degree, rng);
                CHECK(truncate_adapted(pieri_column(g, r), m + 1) ==
                      truncate_adapted(pieri_column(truncate_adapted(g, m), r), m + 1));
            }
}

TEST_CASE("core truncation") {
    SchurSum g = S({5, 1, 1}) + S({4, 1, 1, 1});
    CHECK(truncate_core(g, Partition({2, 1}), 2) == S({4, 1, 1, 1}));
    CHECK(truncate_core(SchurSum::unit(), Partition{}, 2) == SchurSum::unit());
    CHECK(truncate_core(S({2, 1}), Partition({1}), 2) == SchurSum{});
    CHECK_THROWS_AS(truncate_core(g, Partition({2, 2}), 2), precondition_error);
}

TEST_CASE("core truncation only sees adapted shapes at the staircase core") {
    std::mt19937 rng(13);
    for (int degree = 1; degree <= 10; ++degree)
        for (int m = 0; m <= 4; ++m) {
            SchurSum g = random_homogeneous(degree, rng);
            Partition sigma = staircase(m, 2);
            CHECK(truncate_core(g, sigma, 2) == truncate_core(truncate_adapted(g, m), sigma, 2));
        }
}

TEST_CASE("core truncations over occurring cores partition a sum") {
    std::mt19937 rng(21);
    for (int degree = 1; degree <= 10; ++degree) {
        SchurSum g = random_homogeneous(degree, rng);
        std::set<Partition> cores;
        for (const auto& [lambda, c] : g.terms())
            cores.insert(l_core(lambda, 2));
        SchurSum total;
        for (const auto& gamma : cores)
            total += truncate_core(g, gamma, 2);
        CHECK(total == g);
    }
}

TEST_CASE("product_character") {
    CHECK(product_character(Composition({4}), Composition({3})) ==
          S({5, 1, 1}) + S({4, 1, 1, 1}));
    CHECK(product_character(Composition{}, Composition{}) == SchurSum::unit());
    CHECK(product_character(Composition({2}), Composition({1})) == S({3}) + S({2, 1}));
}

TEST_CASE("rendering") {
    CHECK(render_schur_sum(S({5, 1, 1}) + S({4, 1, 1, 1})) == "s(5,1^2) + s(4,1^3)");
    SchurSum g;
    g.add(Partition({2, 1}), 2);
    CHECK(render_schur_sum(g) == "2*s(2,1)");
}
