#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diskmcg/families.hpp"
#include "diskmcg/search.hpp"

using namespace diskmcg;

TEST_CASE("profile multisets") {
    // base instance: M=(2,2,0), J12=2 forces {{1,2},{1,2}}
    Factorization F = paper_family(1, 1, 1, 1, {0, 0, 0});
    auto ms = profile_multisets(multiplicity_profile(F));
    REQUIRE(ms.size() == 1);
    CHECK(ms[0] == std::vector<HoleSet>{HoleSet{1, 2}, HoleSet{1, 2}});

    MultiplicityProfile p;
    p.n = 3;
    p.M = {1, 0, 0};
    p.J.assign(3, std::vector<int64_t>(3, 0));
    auto single = profile_multisets(p);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == std::vector<HoleSet>{HoleSet{1}});

    // separated pair: J forces two singletons
    p.M = {1, 1, 0};
    auto sep = profile_multisets(p);
    REQUIRE(sep.size() == 1);
    CHECK(sep[0] == std::vector<HoleSet>{HoleSet{1}, HoleSet{2}});

    // joint count without enough multiplicity: infeasible
    p.M = {1, 1, 0};
    p.J[0][1] = p.J[1][0] = 2;
    CHECK(profile_multisets(p).empty());

    // ambiguous: {1,2}+{3} vs three singletons is cut by J
    p.M = {1, 1, 1};
    p.J[0][1] = p.J[1][0] = 1;
    auto amb = profile_multisets(p);
    REQUIRE(amb.size() == 1);
    CHECK(amb[0] == std::vector<HoleSet>{HoleSet{1, 2}, HoleSet{3}});  // bitmask order
}

TEST_CASE("enumerate curves") {
    CHECK(enumerate_curves(3, {2}, 5).size() == 1);
    CHECK(enumerate_curves(3, {1, 2}, 0).size() == 1);
    auto more = enumerate_curves(3, {1, 2}, 2);
    CHECK(more.size() > 1);
    CHECK(more[0].cls.letters == std::vector<Letter>{1, 2});  // canonical first
    // all entries are distinct classes
    for (size_t i = 0; i < more.size(); ++i)
        for (size_t j = i + 1; j < more.size(); ++j)
            CHECK_FALSE(same_class(more[i], more[j]));
}

TEST_CASE("boundary twists enumerate to a single class") {
    Factorization F;
    F.n = 3;
    F.curves = {canonical_curve(3, {1}), canonical_curve(3, {2})};
    SearchConfig cfg;
    cfg.conjugator_bound = 3;
    cfg.dedupe_bound = 2;
    SearchStats stats;
    auto classes = enumerate_factorizations(F, cfg, &stats);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].members_found == 1);
    CHECK_FALSE(classes[0].possibly_equivalent);
    CHECK(stats.candidates_planned == 1);
}

TEST_CASE("base instance enumeration") {
    Factorization target = paper_family(1, 1, 1, 1, {0, 0, 0});
    SearchConfig cfg;
    cfg.conjugator_bound = 3;
    cfg.dedupe_bound = 3;
    SearchStats stats;
    auto classes = enumerate_factorizations(target, cfg, &stats);
    CHECK(classes.size() >= 1);
    CHECK(classes.size() <= 2);
    MappingClass phi = product(target);
    bool target_found = false;
    for (const FactorizationClass& cls : classes) {
        CHECK(equals(product(cls.representative), phi));  // soundness
        bool all_match = true;
        for (size_t i = 0; i < target.curves.size(); ++i)
            if (!same_class(cls.representative.curves[i], target.curves[i])) all_match = false;
        if (all_match) target_found = true;
    }
    CHECK(target_found);

    UniqueFillingReport rep = verify_unique_filling(target, cfg);
    CHECK(rep.class_count == static_cast<long long>(classes.size()));
    CHECK(rep.all_invariants_equal);
    CHECK(rep.invariants[0].euler == 0);
    CHECK(rep.invariants[0].h1_rank == 2);
}

TEST_CASE("determinism across worker counts") {
    Factorization target = paper_family(1, 1, 1, 1, {0, 0, 0});
    SearchConfig cfg;
    cfg.conjugator_bound = 3;
    cfg.dedupe_bound = 2;
    cfg.workers = 1;
    auto a = enumerate_factorizations(target, cfg);
    cfg.workers = 8;
    auto b = enumerate_factorizations(target, cfg);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].signature == b[i].signature);
        CHECK(a[i].members_found == b[i].members_found);
        for (size_t j = 0; j < a[i].representative.curves.size(); ++j)
            CHECK(same_class(a[i].representative.curves[j], b[i].representative.curves[j]));
    }
}

TEST_CASE("resource ceiling") {
    Factorization target = paper_family(1, 1, 1, 1, {0, 0, 0});
    SearchConfig cfg;
    cfg.conjugator_bound = 3;
    cfg.ceiling = 3;
    CHECK_THROWS_AS(enumerate_factorizations(target, cfg), ResourceLimitError);
    try {
        enumerate_factorizations(target, cfg);
    } catch (const ResourceLimitError& e) {
        CHECK(e.ceiling == 3);
        CHECK(e.candidates_planned > 3);
    }
}

TEST_CASE("empty target is rejected") {
    Factorization F;
    F.n = 3;
    CHECK_THROWS_AS(enumerate_factorizations(F, SearchConfig{}), ParameterError);
}
