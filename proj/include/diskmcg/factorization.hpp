#pragma once

#include <optional>
#include <vector>

#include "diskmcg/mapping_class.hpp"

namespace diskmcg {

// Ordered product of positive Dehn twists, written left to right:
// curves = (a_1, ..., a_k) stands for t_{a_1} t_{a_2} ... t_{a_k}.
struct Factorization {
    int n = 0;
    std::vector<Curve> curves;

    size_t size() const { return curves.size(); }
};

// M[i-1] = number of factors enclosing hole i; J[i-1][j-1] = number of
// factors enclosing both i and j (diagonal unused, kept zero).
struct MultiplicityProfile {
    int n = 0;
    std::vector<int64_t> M;
    std::vector<std::vector<int64_t>> J;

    bool operator==(const MultiplicityProfile&) const = default;
};

// Left-to-right group product (rightmost factor applied first).
MappingClass product(const Factorization& F);

MultiplicityProfile multiplicity_profile(const Factorization& F);

// Replaces (a_i, a_{i+1}) by (a_{i+1}, t_{a_{i+1}}^{-1}(a_i)). 1-based i,
// 1 <= i < size. Preserves product and multiplicity profile.
Factorization hurwitz_move(const Factorization& F, int i);

// Replaces (a_i, a_{i+1}) by (t_{a_i}(a_{i+1}), a_i); inverse of hurwitz_move.
Factorization hurwitz_inverse(const Factorization& F, int i);

// Every factor curve replaced by its image under f; the product becomes
// f . product(F) . f^{-1}.
Factorization global_conjugate(const Factorization& F, const MappingClass& f);

// True iff the twists about A and B commute exactly.
bool verify_relation_disjoint(const Curve& A, const Curve& B);

struct LanternResult {
    bool ok = false;
    std::optional<Curve> witness;  // the A-union-C curve making the relation hold
};

// Searches conjugator words of length <= bound for an (A u C)-curve W with
//   t_A t_B t_C t_{AuBuC} = t_{AuB} t_{BuC} t_W   (exact equality).
// A, B, C must be pairwise disjoint. All other curves are canonical.
LanternResult verify_relation_lantern(int n, HoleSet A, HoleSet B, HoleSet C,
                                      int bound = 4);

}  // namespace diskmcg
