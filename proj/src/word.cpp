#include "diskmcg/word.hpp"

#include <algorithm>

namespace diskmcg {

namespace {

void reduce_into(std::vector<Letter>& out, const std::vector<Letter>& in) {
    for (Letter x : in) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
}

// (index, sign) with positive < negative
inline uint64_t letter_key(Letter x) {
    return (static_cast<uint64_t>(x < 0 ? -x : x) << 1) | (x < 0 ? 1u : 0u);
}

bool rotation_less(const std::vector<Letter>& w, size_t ra,
                   const std::vector<Letter>& v, size_t rb) {
    const size_t len = w.size();
    for (size_t i = 0; i < len; ++i) {
        uint64_t ka = letter_key(w[(ra + i) % len]);
        uint64_t kb = letter_key(v[(rb + i) % len]);
        if (ka != kb) return ka < kb;
    }
    return false;
}

}  // namespace

Word make_word(int n, std::vector<Letter> raw) {
    if (n < 0) throw MalformedWordError("alphabet size must be nonnegative");
    for (Letter x : raw) {
        int idx = x < 0 ? -x : x;
        if (idx < 1 || idx > n)
            throw MalformedWordError("letter index " + std::to_string(x) +
                                     " outside alphabet of size " + std::to_string(n));
    }
    Word w;
    w.n = n;
    w.letters.reserve(raw.size());
    reduce_into(w.letters, raw);
    return w;
}

Word generator(int n, int i, int sign) {
    if (i < 1 || i > n) throw IndexError("generator index out of range");
    Word w;
    w.n = n;
    w.letters.push_back(sign < 0 ? -i : i);
    return w;
}

Word block_word(int n, int a, int b) {
    if (a < 1 || b > n || a > b) throw IndexError("bad block range");
    Word w;
    w.n = n;
    for (int i = a; i <= b; ++i) w.letters.push_back(i);
    return w;
}

Word reduce(const Word& w) {
    Word out;
    out.n = w.n;
    out.letters.reserve(w.letters.size());
    reduce_into(out.letters, w.letters);
    return out;
}

Word inverse(const Word& w) {
    Word out;
    out.n = w.n;
    out.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        out.letters.push_back(-*it);
    return out;
}

Word concat(const Word& a, const Word& b) {
    if (a.n != b.n) throw SizeMismatchError("concat: alphabet mismatch");
    Word out;
    out.n = a.n;
    out.letters = a.letters;
    reduce_into(out.letters, b.letters);
    return out;
}

Word conjugate(const Word& g, const Word& w) {
    return concat(concat(g, w), inverse(g));
}

CyclicWord cyclic_canonical(const Word& w) {
    std::vector<Letter> c = reduce(w).letters;
    size_t lo = 0, hi = c.size();
    while (hi - lo >= 2 && c[lo] == -c[hi - 1]) {
        ++lo;
        --hi;
    }
    c = std::vector<Letter>(c.begin() + lo, c.begin() + hi);

    CyclicWord out;
    out.n = w.n;
    if (c.empty()) return out;

    std::vector<Letter> ci(c.size());
    std::transform(c.rbegin(), c.rend(), ci.begin(), [](Letter x) { return -x; });

    const std::vector<Letter>* best_w = &c;
    size_t best_r = 0;
    for (const auto* cand : {&c, &ci})
        for (size_t r = 0; r < c.size(); ++r)
            if (rotation_less(*cand, r, *best_w, best_r)) {
                best_w = cand;
                best_r = r;
            }
    out.letters.reserve(c.size());
    for (size_t i = 0; i < c.size(); ++i)
        out.letters.push_back((*best_w)[(best_r + i) % c.size()]);
    return out;
}

bool conjugacy_equal(const Word& a, const Word& b) {
    if (a.n != b.n) throw SizeMismatchError("conjugacy_equal: alphabet mismatch");
    return cyclic_canonical(a) == cyclic_canonical(b);
}

std::vector<int64_t> abelianize(const Word& w) {
    std::vector<int64_t> v(w.n, 0);
    for (Letter x : w.letters)
        v[(x < 0 ? -x : x) - 1] += x < 0 ? -1 : 1;
    return v;
}

namespace {
std::string letters_string(const std::vector<Letter>& ls) {
    if (ls.empty()) return "1";
    std::string s;
    for (Letter x : ls) {
        if (!s.empty()) s += ' ';
        s += 'x';
        s += std::to_string(x < 0 ? -x : x);
        if (x < 0) s += "^-1";
    }
    return s;
}
}  // namespace

std::string to_string(const Word& w) { return letters_string(w.letters); }
std::string to_string(const CyclicWord& w) { return letters_string(w.letters); }

}  // namespace diskmcg
