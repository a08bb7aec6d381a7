#pragma once

#include "diskmcg/factorization.hpp"

namespace diskmcg {

// The two-curve monodromy family on the disk with n+p+q holes:
//   boundary-parallel twists tau_i^{m_i}, then t_{B1}, then t_{B2},
// with B1 enclosing {k..n+q} and B2 enclosing {1..k+q-1} u {n+q}.
//
// B2's isotopy class is pinned quantitatively: its conjugator is the
// shortest half-twist word (deterministic enumeration order) whose curve
// still encloses B2's hole set and whose twist pair with B1 has growth
// rate within 1% of the intersection-4 twist-pair stretch 7+4*sqrt(3).
// The chosen word is memoized per (n,k,p,q).
//
// m has length n+p+q; the entry for hole n+q must be 0 and entries in the
// two exponent ranges must be >= 0. Throws ParameterError on bad input.
Factorization paper_family(int n, int k, int p, int q, const std::vector<int64_t>& m);

// Specialization with q = 1 and the exponent pattern: exponent 1 at hole k
// and at holes n+2..n+p+1, and m_i >= 1 elsewhere in 1..n. m has length n;
// its entry at position k is ignored.
Factorization twist_knot_family(int p, int n, int k, const std::vector<int64_t>& m);

}  // namespace diskmcg
