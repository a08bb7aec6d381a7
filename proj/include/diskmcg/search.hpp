#pragma once

#include <string>

#include "diskmcg/factorization.hpp"
#include "diskmcg/filling.hpp"

namespace diskmcg {

struct SearchConfig {
    int conjugator_bound = 2;  // max half-twist word length per curve
    int dedupe_bound = 2;      // max conjugator length for class matching
    int workers = 1;
    long long ceiling = 5000000;  // max planned candidates before aborting
};

// A group of found factorizations identified up to (bounded) global
// conjugation. Classes sharing a signature that could not be matched within
// the dedupe bound are flagged possibly_equivalent instead of merged.
struct FactorizationClass {
    Factorization representative;
    std::string signature;
    long long members_found = 0;
    bool possibly_equivalent = false;
};

// Deterministic work counters (independent of the worker count).
struct SearchStats {
    long long candidates_planned = 0;
    long long matches_found = 0;
};

// All multisets of nonempty hole sets whose counting profile equals p,
// in a deterministic order; each multiset is sorted by bitmask.
std::vector<std::vector<HoleSet>> profile_multisets(const MultiplicityProfile& p);

// All distinct classes of images of the canonical S-curve under half-twist
// words of length <= bound, in first-discovery order (canonical curve first).
// Images may enclose hole sets other than S.
std::vector<Curve> enumerate_curves(int n, HoleSet S, int bound);

// All positive factorizations with the target's multiplicity profile and
// product, within the configured conjugator bound, grouped into classes.
// Boundary-parallel factors are pinned canonical and sorted to the front.
// Output is deterministic regardless of cfg.workers.
// Throws ResourceLimitError when the planned candidate count exceeds
// cfg.ceiling.
std::vector<FactorizationClass> enumerate_factorizations(const Factorization& target,
                                                         const SearchConfig& cfg,
                                                         SearchStats* stats = nullptr);

struct UniqueFillingReport {
    long long class_count = 0;
    bool all_invariants_equal = false;
    std::vector<FactorizationClass> classes;
    std::vector<FillingInvariants> invariants;  // parallel to classes
    SearchStats stats;
};

UniqueFillingReport verify_unique_filling(const Factorization& target,
                                          const SearchConfig& cfg);

}  // namespace diskmcg
