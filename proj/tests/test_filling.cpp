#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "diskmcg/filling.hpp"

using namespace diskmcg;

TEST_CASE("smith normal form") {
    CHECK(smith_diagonal({{1, 0}, {1, 1}}) == std::vector<int64_t>{1, 1});
    CHECK(smith_diagonal({{2, 0}, {0, 3}}) == std::vector<int64_t>{1, 6});
    CHECK(smith_diagonal({{2}}) == std::vector<int64_t>{2});
    CHECK(smith_diagonal({{0, 0}, {0, 0}}).empty());
    CHECK(smith_diagonal({{6, 4}, {4, 6}}) == std::vector<int64_t>{2, 10});
    // divisibility chain on a classic example
    CHECK(smith_diagonal({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}) ==
          std::vector<int64_t>{2, 2, 156});
}

TEST_CASE("euler characteristic") {
    Factorization F;
    F.n = 5;
    CHECK(euler_characteristic(F) == -4);
    for (int i = 1; i <= 3; ++i) F.curves.push_back(canonical_curve(5, HoleSet::single(i)));
    CHECK(euler_characteristic(F) == -1);
}

TEST_CASE("h1 of small fillings") {
    // rows e1, e1+e2 span Z^2
    Factorization F;
    F.n = 2;
    F.curves = {canonical_curve(2, {1}), canonical_curve(2, {1, 2})};
    FillingInvariants inv = h1(F);
    CHECK(inv.h1_rank == 0);
    CHECK(inv.h1_torsion.empty());
    CHECK(inv.euler == 1);

    // repeated singleton row on the 1-holed disk
    Factorization G;
    G.n = 1;
    G.curves = {canonical_curve(1, {1}), canonical_curve(1, {1})};
    FillingInvariants ginv = h1(G);
    CHECK(ginv.h1_rank == 0);
    CHECK(ginv.h1_torsion.empty());

    // no relations at all: free of rank n
    Factorization E;
    E.n = 3;
    FillingInvariants einv = h1(E);
    CHECK(einv.h1_rank == 3);
}

TEST_CASE("six-factor instance on the 5-holed disk") {
    Factorization F;
    F.n = 5;
    for (int i : {1, 2, 3, 5}) F.curves.push_back(canonical_curve(5, HoleSet::single(i)));
    F.curves.push_back(canonical_curve(5, {2, 3, 4}));
    F.curves.push_back(canonical_curve(5, {1, 2, 4}));
    FillingInvariants inv = h1(F);
    CHECK(inv.euler == 2);
    CHECK(inv.h1_rank == 0);
    CHECK(inv.h1_torsion.empty());
    CHECK(inv.relation_matrix.size() == 6);
}

TEST_CASE("invariance under hurwitz moves and conjugation") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> mask(1, 15);
    std::uniform_int_distribution<int> pos(1, 3);
    std::uniform_int_distribution<int> gen(1, 3);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int trial = 0; trial < 30; ++trial) {
        Factorization F;
        F.n = 4;
        for (int i = 0; i < 4; ++i)
            F.curves.push_back(canonical_curve(4, HoleSet(static_cast<uint32_t>(mask(rng)))));
        FillingInvariants base = h1(F);
        FillingInvariants moved = h1(hurwitz_move(F, pos(rng)));
        CHECK(compare_invariants(base, moved));
        SigmaWord w;
        for (int j = 0; j < 3; ++j) w.push_back(gen(rng) * (sign(rng) ? 1 : -1));
        FillingInvariants conj = h1(global_conjugate(F, sigma_word_class(4, w)));
        CHECK(compare_invariants(base, conj));
    }
}

TEST_CASE("compare_invariants") {
    Factorization F;
    F.n = 2;
    F.curves = {canonical_curve(2, {1})};
    FillingInvariants a = h1(F);
    CHECK(compare_invariants(a, a));
    F.curves.push_back(canonical_curve(2, {2}));
    CHECK_FALSE(compare_invariants(a, h1(F)));  // euler differs
}
