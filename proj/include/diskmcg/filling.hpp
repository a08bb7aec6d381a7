#pragma once

#include "diskmcg/factorization.hpp"

namespace diskmcg {

// Homological invariants of the 4-manifold built from the page times a disk
// by attaching a 2-handle along each factor curve.
struct FillingInvariants {
    int64_t euler = 0;
    int64_t h1_rank = 0;
    std::vector<int64_t> h1_torsion;  // invariant factors >= 2, ascending
    std::vector<std::vector<int64_t>> relation_matrix;  // rows = curve classes

    bool operator==(const FillingInvariants&) const = default;
};

// (1 - n) + number of factors.
int64_t euler_characteristic(const Factorization& F);

// H_1 as the cokernel of the indicator-row matrix (row per factor, column
// per hole), via Smith normal form over the integers.
FillingInvariants h1(const Factorization& F);

// True iff euler, h1_rank and h1_torsion all agree.
bool compare_invariants(const FillingInvariants& a, const FillingInvariants& b);

// Smith normal form diagonal (nonnegative, each dividing the next) of an
// arbitrary integer matrix. Exposed for direct testing.
std::vector<int64_t> smith_diagonal(std::vector<std::vector<int64_t>> m);

}  // namespace diskmcg
