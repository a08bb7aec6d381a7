#pragma once

#include <optional>
#include <vector>

#include "diskmcg/holes.hpp"
#include "diskmcg/word.hpp"

namespace diskmcg {

// Mapping class of the disk with n holes, fixing the outer boundary pointwise.
//
// Represented as the induced automorphism of F_n (images of generators)
// together with an inner-boundary framing vector and the permutation of the
// holes. Inverse images are carried alongside so that inversion is O(1);
// every constructor keeps them in sync.
//
// Framing convention: the twist about a convex curve enclosing the hole set S
// carries framing (2 - |S|) on each hole of S. This is the assignment under
// which the chain of boundary components is consistent with the lantern-type
// relation among convex twists, and it makes (automorphism, framing) a group
// homomorphism. Half twists carry framing zero. Framing composes through the
// hole permutation.
struct MappingClass {
    int n = 0;
    std::vector<Word> images;          // images[i-1] = phi(x_i), reduced
    std::vector<Word> inverse_images;  // phi^{-1}(x_i)
    std::vector<int64_t> framing;      // length n
    std::vector<int> perm;             // perm[i-1] = hole that hole i maps to

    static MappingClass identity(int n);

    bool is_identity() const;
    // Every hole fixed (permutation trivial).
    bool is_pure() const { return pure_; }

    // phi(w), reduced. Throws SizeMismatchError.
    Word apply(const Word& w) const;
    Word apply_inverse(const Word& w) const;

    // Internal: recompute perm/purity and check phi(delta) = delta.
    void finish();

  private:
    bool pure_ = false;
};

// Artin half twist swapping holes i and i+1 (1 <= i <= n-1).
MappingClass half_twist(int n, int i);
MappingClass half_twist_inverse(int n, int i);

// Positive Dehn twist about the canonical convex curve enclosing S.
// Nonempty S required. For non-consecutive S the canonical curve is the
// image of the consecutive-block curve under the positive permutation braid
// spreading the block {min(S)..} out to S (order preserved).
MappingClass convex_twist(int n, HoleSet S);

// (f o g): g first, then f. Framings compose through f's hole permutation.
MappingClass compose(const MappingClass& f, const MappingClass& g);

MappingClass invert(const MappingClass& f);

// Exact equality of reduced generator images and framing vectors.
bool equals(const MappingClass& f, const MappingClass& g);

// Signed half-twist word (+j = sigma_j, -j = sigma_j^{-1}), applied
// first-to-last; sigma_word_class composes it into one mapping class.
using SigmaWord = std::vector<int>;

MappingClass sigma_word_class(int n, const SigmaWord& word);
SigmaWord sigma_word_inverse(const SigmaWord& word);

// The positive braid word taking the block {min(S)..min(S)+|S|-1} to S,
// preserving the relative order of the holes.
SigmaWord spread_braid(int n, HoleSet S);

// Isotopy class of an essential simple closed curve: the enclosed hole set,
// a conjugating mapping class g with class = g(w_S), and the cached
// canonical form of the free-homotopy class. When the conjugator is known as
// a half-twist word it is kept for serialization.
struct Curve {
    int n = 0;
    HoleSet enclosed;
    MappingClass conjugator;              // includes the spreading braid
    std::optional<SigmaWord> conjugator_word;  // word applied on top of canonical curve
    CyclicWord cls;
};

// Canonical convex curve for S (empty conjugator word).
Curve canonical_curve(int n, HoleSet S);

// apply(sigma_word_class(word), canonical_curve(S)); keeps the word.
Curve conjugated_curve(int n, HoleSet S, const SigmaWord& word);

// Image of the curve under f. The enclosed set is recomputed from the
// abelianization of the new class (f may permute holes).
Curve apply(const MappingClass& f, const Curve& c);

// g . convex_twist(enclosed) . g^{-1} for the curve's conjugator g.
MappingClass twist_about(const Curve& c);

// Same isotopy class (equal canonical class forms).
bool same_class(const Curve& a, const Curve& b);

}  // namespace diskmcg
