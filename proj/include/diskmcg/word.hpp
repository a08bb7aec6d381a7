#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "diskmcg/errors.hpp"

namespace diskmcg {

// A letter is +i for the generator x_i and -i for its inverse, i in {1..n}.
using Letter = int32_t;

// Freely reduced word in the free group F_n.
struct Word {
    int n = 0;
    std::vector<Letter> letters;  // reduced, every |letter| in {1..n}

    bool operator==(const Word&) const = default;

    bool empty() const { return letters.empty(); }
    size_t length() const { return letters.size(); }
};

// Validates letters against the alphabet and freely reduces.
// Throws MalformedWordError on an out-of-range index.
Word make_word(int n, std::vector<Letter> raw);

// Single generator x_i (sign < 0 for the inverse).
Word generator(int n, int i, int sign = +1);

// x_a x_{a+1} ... x_b
Word block_word(int n, int a, int b);

Word reduce(const Word& w);  // idempotent; make_word output is already reduced
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);              // reduced product ab
Word conjugate(const Word& g, const Word& w);           // g w g^-1

// Canonical form of the free-homotopy class of w: cyclically reduced,
// minimal over all rotations of the word and of its inverse.
// Tie-break order on letters: (index, sign) with positive < negative.
struct CyclicWord {
    int n = 0;
    std::vector<Letter> letters;

    bool operator==(const CyclicWord&) const = default;
    std::strong_ordering operator<=>(const CyclicWord&) const = default;

    size_t length() const { return letters.size(); }
};

CyclicWord cyclic_canonical(const Word& w);

// True iff a and b are conjugate in F_n. Throws SizeMismatchError.
bool conjugacy_equal(const Word& a, const Word& b);

// Exponent-sum vector, length n.
std::vector<int64_t> abelianize(const Word& w);

std::string to_string(const Word& w);
std::string to_string(const CyclicWord& w);

}  // namespace diskmcg
