#include "diskmcg/families.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "diskmcg/affine.hpp"
#include "diskmcg/growth.hpp"

namespace diskmcg {

namespace {

constexpr int kRecipeBound = 4;
// Explicit-word iteration counts: a coarse cheap pass to discard hopeless
// candidates, then a finer confirmation pass.
constexpr int kCoarseIters = 3;
constexpr int kFineIters = 5;

SigmaWord find_b2_word(int n, int k, int p, int q) {
    static std::map<std::tuple<int, int, int, int>, SigmaWord> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(n, k, p, q);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    int N = n + p + q;
    HoleSet S1 = HoleSet::range(k, n + q);
    HoleSet S2 = HoleSet::range(1, k + q - 1).united(HoleSet::single(n + q));
    Curve b1 = canonical_curve(N, S1);
    MappingClass t1 = twist_about(b1);
    double target = stretch_from_z(4);

    std::vector<int> alphabet;
    for (int j = 1; j <= N - 1; ++j) {
        alphabet.push_back(j);
        alphabet.push_back(-j);
    }
    std::vector<SigmaWord> frontier = {{}};
    for (int len = 0; len <= kRecipeBound; ++len) {
        for (const SigmaWord& w : frontier) {
            Curve cand = conjugated_curve(N, S2, w);
            if (cand.enclosed != S2) continue;
            try {
                MappingClass prod = compose(t1, twist_about(cand));
                double coarse = growth_rate(prod, b1, kCoarseIters);
                if (std::abs(coarse - target) / target > 0.05) continue;
                double r = growth_rate(prod, b1, kFineIters);
                if (std::abs(r - target) / target <= 0.01) {
                    cache[key] = w;
                    return w;
                }
            } catch (const GrowthError&) {
                // estimator inconclusive for this candidate; keep searching
            }
        }
        if (len == kRecipeBound) break;
        std::vector<SigmaWord> next;
        for (const SigmaWord& w : frontier)
            for (int x : alphabet) {
                if (!w.empty() && w.back() == -x) continue;
                SigmaWord w2 = w;
                w2.push_back(x);
                next.push_back(std::move(w2));
            }
        frontier = std::move(next);
    }
    throw ParameterError("no valid second-curve conjugator found within bound");
}

}  // namespace

Factorization paper_family(int n, int k, int p, int q, const std::vector<int64_t>& m) {
    if (n < 1 || k < 1 || p < 1 || q < 1 || n < k)
        throw ParameterError("family requires n,k,p,q >= 1 and n >= k");
    int N = n + p + q;
    if (N > 31) throw ParameterError("surface too large");
    if (static_cast<int>(m.size()) != N)
        throw ParameterError("exponent vector must have length n+p+q");
    if (m[n + q - 1] != 0)
        throw ParameterError("exponent at hole n+q must be 0");
    for (int i = 1; i <= N; ++i)
        if (i != n + q && m[i - 1] < 0)
            throw ParameterError("exponents must be nonnegative");

    Factorization F;
    F.n = N;
    for (int i = 1; i <= N; ++i)
        for (int64_t e = 0; e < (i == n + q ? 0 : m[i - 1]); ++e)
            F.curves.push_back(canonical_curve(N, HoleSet::single(i)));
    HoleSet S1 = HoleSet::range(k, n + q);
    HoleSet S2 = HoleSet::range(1, k + q - 1).united(HoleSet::single(n + q));
    F.curves.push_back(canonical_curve(N, S1));
    F.curves.push_back(conjugated_curve(N, S2, find_b2_word(n, k, p, q)));
    return F;
}

Factorization twist_knot_family(int p, int n, int k, const std::vector<int64_t>& m) {
    if (p < 1 || n < 1 || k < 1 || n < k)
        throw ParameterError("family requires p,n,k >= 1 and n >= k");
    if (static_cast<int>(m.size()) != n)
        throw ParameterError("exponent vector must have length n");
    for (int i = 1; i <= n; ++i)
        if (i != k && m[i - 1] < 1)
            throw ParameterError("exponents away from k must be >= 1");
    std::vector<int64_t> full(n + p + 1, 0);
    for (int i = 1; i <= n; ++i) full[i - 1] = (i == k) ? 1 : m[i - 1];
    for (int j = n + 2; j <= n + p + 1; ++j) full[j - 1] = 1;
    return paper_family(n, k, p, 1, full);
}

}  // namespace diskmcg
