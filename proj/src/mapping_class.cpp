#include "diskmcg/mapping_class.hpp"

#include <algorithm>

namespace diskmcg {

MappingClass MappingClass::identity(int n) {
    MappingClass m;
    m.n = n;
    m.images.reserve(n);
    m.inverse_images.reserve(n);
    for (int i = 1; i <= n; ++i) {
        m.images.push_back(generator(n, i));
        m.inverse_images.push_back(generator(n, i));
    }
    m.framing.assign(n, 0);
    m.finish();
    return m;
}

bool MappingClass::is_identity() const {
    for (int i = 1; i <= n; ++i)
        if (images[i - 1].letters != std::vector<Letter>{i}) return false;
    return std::all_of(framing.begin(), framing.end(), [](int64_t t) { return t == 0; });
}

Word MappingClass::apply(const Word& w) const {
    if (w.n != n) throw SizeMismatchError("apply: surface size mismatch");
    Word out;
    out.n = n;
    for (Letter x : w.letters) {
        const Word& img = images[(x < 0 ? -x : x) - 1];
        if (x > 0) {
            for (Letter y : img.letters) {
                if (!out.letters.empty() && out.letters.back() == -y)
                    out.letters.pop_back();
                else
                    out.letters.push_back(y);
            }
        } else {
            for (auto it = img.letters.rbegin(); it != img.letters.rend(); ++it) {
                if (!out.letters.empty() && out.letters.back() == *it)
                    out.letters.pop_back();
                else
                    out.letters.push_back(-*it);
            }
        }
    }
    return out;
}

Word MappingClass::apply_inverse(const Word& w) const {
    MappingClass tmp;
    tmp.n = n;
    tmp.images = inverse_images;
    return tmp.apply(w);
}

void MappingClass::finish() {
    perm.assign(n, 0);
    pure_ = true;
    std::vector<bool> hit(n + 1, false);
    for (int i = 1; i <= n; ++i) {
        // phi(x_i) is conjugate to some x_j; j is visible in the exponent sums.
        std::vector<int64_t> v = abelianize(images[i - 1]);
        int j = 0;
        for (int k = 1; k <= n; ++k) {
            if (v[k - 1] == 0) continue;
            if (v[k - 1] != 1 || j != 0)
                throw Error("generator image is not conjugate to a generator");
            j = k;
        }
        if (j == 0 || hit[j])
            throw Error("generator image is not conjugate to a generator");
        hit[j] = true;
        perm[i - 1] = j;
        if (j != i) pure_ = false;
    }
    // The outer boundary word delta = x_1...x_n must be fixed exactly.
    Word delta = block_word(n, 1, n);
    if (apply(delta) != delta)
        throw Error("mapping class does not fix the boundary word");
}

MappingClass half_twist(int n, int i) {
    if (i < 1 || i >= n) throw IndexError("half twist index out of range");
    MappingClass m = MappingClass::identity(n);
    m.images[i - 1] = make_word(n, {i, i + 1, -i});
    m.images[i] = generator(n, i);
    m.inverse_images[i - 1] = generator(n, i + 1);
    m.inverse_images[i] = make_word(n, {-(i + 1), i, i + 1});
    m.finish();
    return m;
}

MappingClass half_twist_inverse(int n, int i) {
    return invert(half_twist(n, i));
}

namespace {

MappingClass block_twist(int n, int a, int b) {
    MappingClass m = MappingClass::identity(n);
    Word w = block_word(n, a, b);
    Word wi = inverse(w);
    for (int k = a; k <= b; ++k) {
        m.images[k - 1] = conjugate(w, generator(n, k));
        m.inverse_images[k - 1] = conjugate(wi, generator(n, k));
    }
    int64_t t = 2 - (b - a + 1);
    for (int k = a; k <= b; ++k) m.framing[k - 1] = t;
    m.finish();
    return m;
}

}  // namespace

MappingClass convex_twist(int n, HoleSet S) {
    if (S.empty()) throw IndexError("convex twist of empty hole set");
    if (S.max() > n) throw IndexError("hole outside surface");
    if (S.size() == 1) {
        MappingClass m = MappingClass::identity(n);
        m.framing[S.min() - 1] = 1;
        return m;
    }
    int a = S.min(), b = S.min() + S.size() - 1;
    if (S.consecutive()) return block_twist(n, a, b);
    MappingClass g = sigma_word_class(n, spread_braid(n, S));
    return compose(compose(g, block_twist(n, a, b)), invert(g));
}

MappingClass compose(const MappingClass& f, const MappingClass& g) {
    if (f.n != g.n) throw SizeMismatchError("compose: surface size mismatch");
    MappingClass m;
    m.n = f.n;
    m.images.reserve(f.n);
    m.inverse_images.reserve(f.n);
    for (int i = 0; i < f.n; ++i) {
        m.images.push_back(f.apply(g.images[i]));
        m.inverse_images.push_back(g.apply_inverse(f.inverse_images[i]));
    }
    // t(f o g) = t(f) + pi_f . t(g)
    m.framing = f.framing;
    for (int i = 1; i <= f.n; ++i)
        m.framing[f.perm[i - 1] - 1] += g.framing[i - 1];
    m.finish();
    return m;
}

MappingClass invert(const MappingClass& f) {
    MappingClass m;
    m.n = f.n;
    m.images = f.inverse_images;
    m.inverse_images = f.images;
    m.framing.assign(f.n, 0);
    for (int i = 1; i <= f.n; ++i) m.framing[i - 1] = -f.framing[f.perm[i - 1] - 1];
    m.finish();
    return m;
}

bool equals(const MappingClass& f, const MappingClass& g) {
    if (f.n != g.n) throw SizeMismatchError("equals: surface size mismatch");
    return f.images == g.images && f.framing == g.framing;
}

MappingClass sigma_word_class(int n, const SigmaWord& word) {
    MappingClass m = MappingClass::identity(n);
    for (int j : word)
        m = compose(j > 0 ? half_twist(n, j) : half_twist_inverse(n, -j), m);
    return m;
}

SigmaWord sigma_word_inverse(const SigmaWord& word) {
    SigmaWord out;
    out.reserve(word.size());
    for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back(-*it);
    return out;
}

SigmaWord spread_braid(int n, HoleSet S) {
    (void)n;
    std::vector<int> holes = S.holes();
    int t0 = S.min();
    SigmaWord seq;
    for (int i = static_cast<int>(holes.size()) - 1; i >= 0; --i)
        for (int j = t0 + i; j < holes[i]; ++j) seq.push_back(j);
    return seq;
}

Curve canonical_curve(int n, HoleSet S) {
    return conjugated_curve(n, S, {});
}

Curve conjugated_curve(int n, HoleSet S, const SigmaWord& word) {
    if (S.empty()) throw IndexError("curve must enclose a nonempty hole set");
    if (S.max() > n) throw IndexError("hole outside surface");
    MappingClass g = sigma_word_class(n, spread_braid(n, S));
    if (!word.empty()) g = compose(sigma_word_class(n, word), g);
    Curve c;
    c.n = n;
    c.conjugator = g;
    c.conjugator_word = word;
    Word w_block = block_word(n, S.min(), S.min() + S.size() - 1);
    c.cls = cyclic_canonical(g.apply(w_block));
    // block holes pushed forward by the conjugator permutation
    HoleSet enc;
    for (int h = S.min(); h <= S.min() + S.size() - 1; ++h) enc.add(g.perm[h - 1]);
    c.enclosed = enc;
    return c;
}

Curve apply(const MappingClass& f, const Curve& c) {
    if (f.n != c.n) throw SizeMismatchError("apply: surface size mismatch");
    Curve out;
    out.n = c.n;
    out.conjugator = compose(f, c.conjugator);
    out.conjugator_word = std::nullopt;
    Word rep;
    rep.n = c.n;
    rep.letters = c.cls.letters;
    out.cls = cyclic_canonical(f.apply(rep));
    HoleSet s;
    for (int h : c.enclosed.holes()) s.add(f.perm[h - 1]);
    out.enclosed = s;
    return out;
}

MappingClass twist_about(const Curve& c) {
    // Preimage of the enclosed set under the conjugator permutation is the
    // consecutive block the canonical construction starts from.
    std::vector<int> inv_perm(c.n + 1, 0);
    for (int i = 1; i <= c.n; ++i) inv_perm[c.conjugator.perm[i - 1]] = i;
    HoleSet block_set;
    for (int h : c.enclosed.holes()) block_set.add(inv_perm[h]);
    if (!block_set.consecutive())
        throw Error("curve conjugator does not originate from a block");
    MappingClass blk = convex_twist(c.n, block_set);
    if (c.conjugator.is_identity()) return blk;
    return compose(compose(c.conjugator, blk), invert(c.conjugator));
}

bool same_class(const Curve& a, const Curve& b) {
    return a.n == b.n && a.cls == b.cls;
}

}  // namespace diskmcg
