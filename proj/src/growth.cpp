#include "diskmcg/growth.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <unordered_map>

namespace diskmcg {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

// letter -> dense index in [0, 2n)
inline int lidx(Letter x) { return ((x < 0 ? -x : x) - 1) * 2 + (x < 0 ? 1 : 0); }

std::vector<Letter> cyc_reduce(std::vector<Letter> w) {
    size_t lo = 0, hi = w.size();
    while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
        ++lo;
        --hi;
    }
    return {w.begin() + lo, w.begin() + hi};
}

// Exact recurrence on counts of cyclic length-2/3 subwords.
struct Recurrence {
    int n;
    std::vector<std::vector<Letter>> imgs;  // per letter index
    std::vector<std::vector<int>> cancel;   // cancel[a][b]
    std::unordered_map<uint32_t, cpp_int> P, T;

    static uint32_t pkey(int a, int b) { return static_cast<uint32_t>(a) << 8 | b; }
    static uint32_t tkey(int a, int b, int c) {
        return static_cast<uint32_t>(a) << 16 | static_cast<uint32_t>(b) << 8 | c;
    }

    Recurrence(const MappingClass& f, const std::vector<Letter>& w) : n(f.n) {
        imgs.resize(2 * n);
        for (int i = 1; i <= n; ++i) {
            imgs[lidx(i)] = f.images[i - 1].letters;
            imgs[lidx(-i)] = inverse(f.images[i - 1]).letters;
        }
        cancel.assign(2 * n, std::vector<int>(2 * n, 0));
        for (int a = 0; a < 2 * n; ++a)
            for (int b = 0; b < 2 * n; ++b) {
                const auto& u = imgs[a];
                const auto& v = imgs[b];
                int c = 0;
                while (c < static_cast<int>(u.size()) && c < static_cast<int>(v.size()) &&
                       u[u.size() - 1 - c] == -v[c])
                    ++c;
                cancel[a][b] = c;
            }
        size_t L = w.size();
        for (size_t i = 0; i < L; ++i) {
            int a = lidx(w[i]), b = lidx(w[(i + 1) % L]), c = lidx(w[(i + 2) % L]);
            P[pkey(a, b)] += 1;
            T[tkey(a, b, c)] += 1;
        }
    }

    // Every occurring junction must keep at least 3 letters of the middle
    // image's core so that the new pair/triple counts are determined by
    // local windows alone.
    void check() const {
        for (const auto& [k, cnt] : T) {
            if (cnt == 0) continue;
            int z = k >> 16 & 0xff, a = k >> 8 & 0xff, b = k & 0xff;
            if (static_cast<int>(imgs[a].size()) - cancel[z][a] - cancel[a][b] < 3)
                throw GrowthError("growth recurrence lost validity (short core)");
        }
    }

    void step() {
        check();
        std::unordered_map<uint32_t, cpp_int> P2, T2;
        for (const auto& [k, cnt] : T) {
            int z = k >> 16 & 0xff, a = k >> 8 & 0xff, b = k & 0xff;
            const auto& ia = imgs[a];
            int lo = cancel[z][a], hi = static_cast<int>(ia.size()) - cancel[a][b];
            for (int i = lo; i + 1 < hi; ++i)
                P2[pkey(lidx(ia[i]), lidx(ia[i + 1]))] += cnt;
            for (int i = lo; i + 2 < hi; ++i)
                T2[tkey(lidx(ia[i]), lidx(ia[i + 1]), lidx(ia[i + 2]))] += cnt;
        }
        for (const auto& [k, cnt] : P) {
            int a = k >> 8 & 0xff, b = k & 0xff;
            const auto& ia = imgs[a];
            const auto& ib = imgs[b];
            int ea = static_cast<int>(ia.size()) - cancel[a][b];  // end of kept part
            int sb = cancel[a][b];                                // start of kept part
            int la1 = lidx(ia[ea - 1]), la0 = lidx(ia[ea - 2]);
            int fb0 = lidx(ib[sb]), fb1 = lidx(ib[sb + 1]);
            P2[pkey(la1, fb0)] += cnt;
            T2[tkey(la0, la1, fb0)] += cnt;
            T2[tkey(la1, fb0, fb1)] += cnt;
        }
        P = std::move(P2);
        T = std::move(T2);
    }

    cpp_int length() const {
        cpp_int s = 0;
        for (const auto& [k, cnt] : P) s += cnt;
        return s;
    }
};

}  // namespace

double growth_rate(const MappingClass& f, const Curve& seed, int iters) {
    if (iters < 2) throw ParameterError("growth_rate requires iters >= 2");
    if (f.n != seed.n) throw SizeMismatchError("growth_rate: size mismatch");
    if (seed.cls.letters.empty()) throw GrowthError("seed class is trivial");

    constexpr size_t kExplicitLimit = 200000;

    std::vector<Letter> w = seed.cls.letters;
    std::vector<cpp_int> lens;
    lens.push_back(w.size());
    int k = 0;
    while (k < iters && w.size() <= kExplicitLimit) {
        Word cur;
        cur.n = f.n;
        cur.letters = w;
        w = cyc_reduce(f.apply(cur).letters);
        if (w.empty()) throw GrowthError("seed class annihilated");
        lens.push_back(w.size());
        ++k;
    }
    if (k < iters) {
        Recurrence rec(f, w);
        for (; k < iters; ++k) {
            rec.step();
            lens.push_back(rec.length());
        }
    }
    cpp_rational r(lens[iters], lens[iters - 1]);
    return r.convert_to<double>();
}

}  // namespace diskmcg
