// Acceptance checks, one pass/fail line per criterion. The first argument
// must be the path to the command-line binary (used by criterion 8).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "diskmcg/affine.hpp"
#include "diskmcg/families.hpp"
#include "diskmcg/filling.hpp"
#include "diskmcg/growth.hpp"
#include "diskmcg/search.hpp"

using namespace diskmcg;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::cout << "criterion " << criterion << ": " << (ok ? "PASS" : "FAIL") << " — "
              << detail << "\n";
    if (!ok) ++failures;
}

double lambda4() { return 7 + 4 * std::sqrt(3.0); }

void criterion1() {
    auto [a, b] = thurston_rep(4);
    AffineRep prod = mul(a, b);
    bool ok = prod.trace() == -14;
    NTClass cls = classify(prod);
    ok = ok && cls.kind == NTClass::hyperbolic && cls.stretch &&
         std::abs(*cls.stretch - lambda4()) < 1e-12;
    ok = ok && z_from_stretch(lambda4()) == 4;
    report(1, ok, "twist-pair matrix: trace -14, stretch 7+4*sqrt(3), z=4");
}

void criterion2() {
    Factorization base = paper_family(1, 1, 1, 1, {0, 0, 0});
    double r = growth_rate(product(base), base.curves[0], 20);
    bool ok = std::abs(r - lambda4()) / lambda4() < 0.01;
    std::ostringstream d;
    d << "growth estimate after 20 iterations: " << r;
    report(2, ok, d.str());
}

void criterion3() {
    bool ok = true;
    int instances = 0;
    for (int n = 1; n <= 3 && ok; ++n)
        for (int k = 1; k <= n && ok; ++k)
            for (int p = 1; p <= 3 && ok; ++p)
                for (int q = 1; q <= 3 && ok; ++q) {
                    int N = n + p + q;
                    std::vector<int64_t> m(N, 1);
                    m[n + q - 1] = 0;
                    Factorization F = paper_family(n, k, p, q, m);
                    MultiplicityProfile prof = multiplicity_profile(F);
                    ++instances;
                    auto J = [&](int i, int j) { return prof.J[i - 1][j - 1]; };
                    if (prof.M[n + q - 1] != 2) ok = false;
                    for (int i = k; i <= k + q - 1; ++i)
                        if (J(i, n + q) != 2) ok = false;
                    for (int j = n + q + 1; j <= N; ++j) {
                        if (J(n + q, j) != 0) ok = false;
                        if (prof.M[j - 1] != m[j - 1]) ok = false;
                        for (int i = 1; i <= N; ++i)
                            if (i != j && J(i, j) != 0) ok = false;
                    }
                    for (int r = 1; r <= n + q - 1; ++r) {
                        if (r >= k && r <= k + q - 1) continue;
                        if (J(r, n + q) != 1) ok = false;
                    }
                    for (int s = 1; s <= k - 1; ++s)
                        for (int t = k + q; t <= n + q - 1; ++t)
                            if (J(s, t) != 0) ok = false;
                }
    report(3, ok, "multiplicity bookkeeping on " + std::to_string(instances) +
                      " family instances (n,k,p,q <= 3)");
}

void criterion4() {
    bool ok = true;
    long long pairs = 0;
    for (int n = 3; n <= 5; ++n)
        for (uint32_t a = 1; a < (1u << n); ++a)
            for (uint32_t b = a + 1; b < (1u << n); ++b) {
                HoleSet A(a), B(b);
                bool nested = A.subset_of(B) || B.subset_of(A);
                bool separated =
                    A.disjoint_from(B) && (A.max() < B.min() || B.max() < A.min());
                if (!nested && !separated) continue;
                ++pairs;
                if (!verify_relation_disjoint(canonical_curve(n, A), canonical_curve(n, B)))
                    ok = false;
            }
    int lanterns = 0;
    for (int n = 3; n <= 4; ++n)
        for (int i = 1; i + 2 <= n; ++i) {
            ++lanterns;
            if (!verify_relation_lantern(n, HoleSet::single(i), HoleSet::single(i + 1),
                                         HoleSet::single(i + 2), 4)
                     .ok)
                ok = false;
        }
    report(4, ok, "commuting relation on " + std::to_string(pairs) +
                      " disjoint pairs; lantern witnesses for " +
                      std::to_string(lanterns) + " singleton triples");
}

void criterion5() {
    std::mt19937 rng(20240601);
    std::uniform_int_distribution<int> mask(1, 15);
    std::uniform_int_distribution<int> wordlen(0, 2);
    std::uniform_int_distribution<int> gen(1, 3);
    std::uniform_int_distribution<int> sign(0, 1);
    std::uniform_int_distribution<int> pos(1, 3);
    bool ok = true;
    const int kCases = 500;
    for (int trial = 0; trial < kCases && ok; ++trial) {
        Factorization F;
        F.n = 4;
        for (int i = 0; i < 4; ++i) {
            HoleSet S(static_cast<uint32_t>(mask(rng)));
            SigmaWord w;
            if (S.size() > 1)
                for (int j = wordlen(rng); j > 0; --j)
                    w.push_back(gen(rng) * (sign(rng) ? 1 : -1));
            F.curves.push_back(conjugated_curve(4, S, w));
        }
        int i = pos(rng);
        MappingClass phi = product(F);
        MultiplicityProfile prof = multiplicity_profile(F);
        FillingInvariants inv = h1(F);

        Factorization moved = hurwitz_move(F, i);
        if (!equals(product(moved), phi)) ok = false;
        if (!(multiplicity_profile(moved) == prof)) ok = false;
        if (!compare_invariants(h1(moved), inv)) ok = false;
        if (euler_characteristic(moved) != inv.euler) ok = false;

        Factorization back = hurwitz_move(hurwitz_inverse(F, i), i);
        for (size_t j = 0; j < F.curves.size(); ++j)
            if (!same_class(back.curves[j], F.curves[j])) ok = false;

        SigmaWord gw;
        for (int j = 0; j < 3; ++j) gw.push_back(gen(rng) * (sign(rng) ? 1 : -1));
        MappingClass g = sigma_word_class(4, gw);
        Factorization conj = global_conjugate(F, g);
        if (!equals(product(conj), compose(compose(g, phi), invert(g)))) ok = false;
        if (!compare_invariants(h1(conj), inv)) ok = false;
    }
    report(5, ok, std::to_string(kCases) +
                      " random cases: Hurwitz/product, round-trip, conjugation, homology");
}

// shared between criteria 6 and 7
UniqueFillingReport five_hole_report;

void criterion6() {
    bool ok = true;
    std::string detail;

    Factorization base = paper_family(1, 1, 1, 1, {0, 0, 0});
    SearchConfig cfg3;
    cfg3.conjugator_bound = 3;
    cfg3.dedupe_bound = 3;
    UniqueFillingReport rep = verify_unique_filling(base, cfg3);
    ok = ok && rep.class_count >= 1 && rep.class_count <= 2 && rep.all_invariants_equal;
    bool target_found = false;
    for (const FactorizationClass& cls : rep.classes) {
        if (!equals(product(cls.representative), product(base))) ok = false;
        bool match = true;
        for (size_t i = 0; i < base.curves.size(); ++i)
            if (!same_class(cls.representative.curves[i], base.curves[i])) match = false;
        target_found = target_found || match;
    }
    ok = ok && target_found;
    detail += "base: " + std::to_string(rep.class_count) + " class(es)";

    Factorization five_hole = paper_family(3, 2, 1, 1, {1, 1, 1, 0, 1});
    SearchConfig cfg2;
    cfg2.conjugator_bound = 2;
    cfg2.dedupe_bound = 2;
    five_hole_report = verify_unique_filling(five_hole, cfg2);
    ok = ok && five_hole_report.class_count >= 1 && five_hole_report.all_invariants_equal;
    for (const FactorizationClass& cls : five_hole_report.classes)
        if (!equals(product(cls.representative), product(five_hole))) ok = false;
    detail += "; 5-holed instance: " + std::to_string(five_hole_report.class_count) +
              " class(es), invariants equal";
    report(6, ok, detail);
}

void criterion7() {
    bool ok = five_hole_report.class_count >= 1;
    for (const FillingInvariants& inv : five_hole_report.invariants)
        if (inv.euler != 2 || inv.h1_rank != 0 || !inv.h1_torsion.empty()) ok = false;
    report(7, ok, "5-holed instance: euler 2 and trivial first homology for every class");
}

void criterion8(const std::string& cli) {
    std::string dir = "/tmp/acceptance8";
    if (std::system(("mkdir -p " + dir).c_str()) != 0) {
        report(8, false, "could not create scratch directory");
        return;
    }
    std::string prog = dir + "/prog.dmcg";
    {
        std::ofstream out(prog);
        out << "surface(3) tw{1,2} tw{1,2|s2 s2} enumerate\n";
    }
    auto run = [&](int threads, const std::string& outfile) {
        std::string cmd = "'" + cli + "' " + prog + " --bound 2 --dedupe-bound 2 --threads " +
                          std::to_string(threads) + " > " + outfile + " 2>/dev/null";
        return std::system(cmd.c_str());
    };
    int r1 = run(1, dir + "/t1.json");
    int r8 = run(8, dir + "/t8.json");
    auto slurp = [](const std::string& path) {
        std::ifstream in(path);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    std::string a = slurp(dir + "/t1.json"), b = slurp(dir + "/t8.json");
    bool ok = r1 == 0 && r8 == 0 && !a.empty() && a == b;
    report(8, ok, "enumerate output byte-identical for --threads 1 and --threads 8");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli>\n";
        return 2;
    }
    auto t0 = std::chrono::steady_clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8(argv[1]);
    auto t1 = std::chrono::steady_clock::now();
    std::cout << "total elapsed: "
              << std::chrono::duration_cast<std::chrono::seconds>(t1 - t0).count() << " s\n";
    return failures == 0 ? 0 : 1;
}
