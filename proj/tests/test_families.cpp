#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diskmcg/families.hpp"
#include "diskmcg/filling.hpp"

using namespace diskmcg;

TEST_CASE("base instance on the 3-holed disk") {
    Factorization F = paper_family(1, 1, 1, 1, {0, 0, 0});
    CHECK(F.n == 3);
    REQUIRE(F.curves.size() == 2);
    CHECK(F.curves[0].enclosed == HoleSet{1, 2});
    CHECK(F.curves[0].cls.letters == std::vector<Letter>{1, 2});
    CHECK(F.curves[1].enclosed == HoleSet{1, 2});
    CHECK(F.curves[1].cls.letters == std::vector<Letter>{1, 2, 3, 2, -3, -2});

    MultiplicityProfile p = multiplicity_profile(F);
    CHECK(p.M == std::vector<int64_t>{2, 2, 0});
    CHECK(p.J[0][1] == 2);
}

TEST_CASE("k=2 n=3 instance on the 5-holed disk") {
    Factorization F = paper_family(3, 2, 1, 1, {1, 1, 1, 0, 1});
    CHECK(F.n == 5);
    REQUIRE(F.curves.size() == 6);
    CHECK(F.curves[0].enclosed == HoleSet{1});
    CHECK(F.curves[1].enclosed == HoleSet{2});
    CHECK(F.curves[2].enclosed == HoleSet{3});
    CHECK(F.curves[3].enclosed == HoleSet{5});
    CHECK(F.curves[4].enclosed == HoleSet{2, 3, 4});
    CHECK(F.curves[5].enclosed == HoleSet{1, 2, 4});

    FillingInvariants inv = h1(F);
    CHECK(inv.euler == 2);
    CHECK(inv.h1_rank == 0);
    CHECK(inv.h1_torsion.empty());
}

TEST_CASE("profile matches the two-curve bookkeeping on a grid") {
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= n; ++k)
            for (int p = 1; p <= 2; ++p)
                for (int q = 1; q <= 2; ++q) {
                    int N = n + p + q;
                    std::vector<int64_t> m(N, 1);
                    m[n + q - 1] = 0;
                    Factorization F = paper_family(n, k, p, q, m);
                    MultiplicityProfile prof = multiplicity_profile(F);
                    CHECK(prof.M[n + q - 1] == 2);
                    for (int i = k; i <= k + q - 1; ++i)
                        if (i != n + q) CHECK(prof.J[i - 1][n + q - 1] == 2);
                    for (int j = n + q + 1; j <= N; ++j)
                        CHECK(prof.J[n + q - 1][j - 1] == 0);
                }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(paper_family(1, 2, 1, 1, {0, 0, 0}), ParameterError);  // k > n
    CHECK_THROWS_AS(paper_family(1, 1, 1, 1, {0, 0}), ParameterError);     // bad length
    CHECK_THROWS_AS(paper_family(1, 1, 1, 1, {0, 1, 0}), ParameterError);  // hole n+q
    CHECK_THROWS_AS(paper_family(1, 1, 1, 1, {-1, 0, 0}), ParameterError);
    CHECK_THROWS_AS(twist_knot_family(1, 2, 1, {1, 0}), ParameterError);   // m_2 < 1
}

TEST_CASE("twist knot specialization") {
    Factorization F = twist_knot_family(1, 1, 1, {7});  // entry at k ignored
    CHECK(F.n == 3);
    REQUIRE(F.curves.size() == 4);
    CHECK(F.curves[0].enclosed == HoleSet{1});  // exponent 1 at hole k
    CHECK(F.curves[1].enclosed == HoleSet{3});  // exponent 1 on the p-range
    CHECK(F.curves[2].enclosed == HoleSet{1, 2});
    CHECK(F.curves[3].enclosed == HoleSet{1, 2});

    Factorization G = twist_knot_family(1, 2, 1, {1, 3});
    CHECK(G.n == 4);
    // tau_1 tau_2^3 tau_4 then B1={1,2,3}, B2={1,3}
    REQUIRE(G.curves.size() == 7);
    CHECK(G.curves[5].enclosed == HoleSet{1, 2, 3});
    CHECK(G.curves[6].enclosed == HoleSet{1, 3});
}
