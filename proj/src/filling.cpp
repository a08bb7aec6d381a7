#include "diskmcg/filling.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace diskmcg {

namespace {

using boost::multiprecision::cpp_int;

std::vector<cpp_int> snf(std::vector<std::vector<cpp_int>> m) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    std::vector<cpp_int> diag;
    size_t r0 = 0, c0 = 0;
    while (r0 < rows && c0 < cols) {
        // pick the entry of smallest nonzero magnitude as pivot
        size_t pr = rows, pc = cols;
        cpp_int best = 0;
        for (size_t i = r0; i < rows; ++i)
            for (size_t j = c0; j < cols; ++j) {
                cpp_int v = abs(m[i][j]);
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    pr = i;
                    pc = j;
                }
            }
        if (pr == rows) break;  // all zero
        std::swap(m[r0], m[pr]);
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][c0], m[i][pc]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = r0 + 1; i < rows; ++i) {
                if (m[i][c0] == 0) continue;
                cpp_int q = m[i][c0] / m[r0][c0];
                for (size_t j = c0; j < cols; ++j) m[i][j] -= q * m[r0][j];
                if (m[i][c0] != 0) {  // remainder smaller than pivot: swap up
                    std::swap(m[r0], m[i]);
                    clean = false;
                }
            }
            for (size_t j = c0 + 1; j < cols; ++j) {
                if (m[r0][j] == 0) continue;
                cpp_int q = m[r0][j] / m[r0][c0];
                for (size_t i = r0; i < rows; ++i) m[i][j] -= q * m[i][c0];
                if (m[r0][j] != 0) {
                    for (size_t i = 0; i < rows; ++i) std::swap(m[i][c0], m[i][j]);
                    clean = false;
                }
            }
        }
        diag.push_back(abs(m[r0][c0]));
        ++r0;
        ++c0;
    }
    // enforce the divisibility chain d_k | d_{k+1}
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t i = 0; i + 1 < diag.size(); ++i) {
            if (diag[i + 1] % diag[i] == 0) continue;
            cpp_int g = gcd(diag[i], diag[i + 1]);
            cpp_int l = diag[i] / g * diag[i + 1];
            diag[i] = g;
            diag[i + 1] = l;
            changed = true;
        }
    }
    return diag;
}

}  // namespace

std::vector<int64_t> smith_diagonal(std::vector<std::vector<int64_t>> m) {
    std::vector<std::vector<cpp_int>> big(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        big[i].assign(m[i].begin(), m[i].end());
    std::vector<cpp_int> d = snf(std::move(big));
    std::vector<int64_t> out;
    for (const cpp_int& v : d) out.push_back(v.convert_to<int64_t>());
    return out;
}

int64_t euler_characteristic(const Factorization& F) {
    return (1 - F.n) + static_cast<int64_t>(F.curves.size());
}

FillingInvariants h1(const Factorization& F) {
    FillingInvariants inv;
    inv.euler = euler_characteristic(F);
    for (const Curve& c : F.curves) {
        std::vector<int64_t> row(F.n, 0);
        for (int h : c.enclosed.holes()) row[h - 1] = 1;
        inv.relation_matrix.push_back(std::move(row));
    }
    std::vector<int64_t> d = smith_diagonal(inv.relation_matrix);
    int64_t nonzero = 0;
    for (int64_t v : d)
        if (v != 0) ++nonzero;
    inv.h1_rank = F.n - nonzero;
    for (int64_t v : d)
        if (v >= 2) inv.h1_torsion.push_back(v);
    return inv;
}

bool compare_invariants(const FillingInvariants& a, const FillingInvariants& b) {
    return a.euler == b.euler && a.h1_rank == b.h1_rank && a.h1_torsion == b.h1_torsion;
}

}  // namespace diskmcg
