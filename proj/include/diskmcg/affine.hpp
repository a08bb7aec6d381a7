#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "diskmcg/errors.hpp"

namespace diskmcg {

// 2x2 integer matrix of determinant 1 (affine representative of a twist
// pair about filling curves under Thurston's representation).
struct AffineRep {
    int64_t a = 1, b = 0, c = 0, d = 1;  // [[a,b],[c,d]]

    int64_t trace() const { return a + d; }
    int64_t det() const { return a * d - b * c; }
    bool operator==(const AffineRep&) const = default;
};

AffineRep mul(const AffineRep& x, const AffineRep& y);

struct NTClass {
    enum Kind { elliptic, parabolic, hyperbolic };
    Kind kind = elliptic;
    std::optional<double> stretch;  // present iff hyperbolic; then > 1
};

// ( [[1,z],[0,1]], [[1,0],[-z,1]] ): the images of the two twists when the
// curves intersect z times. Throws ParameterError for z < 0.
std::pair<AffineRep, AffineRep> thurston_rep(int64_t z);

// |trace| < 2 elliptic (periodic), = 2 parabolic (reducible), > 2 hyperbolic
// (pseudo-Anosov) with stretch (|tr| + sqrt(tr^2-4))/2.
// Throws ParameterError on det != 1.
NTClass classify(const AffineRep& m);

// (z^2 - 2 + z sqrt(z^2 - 4)) / 2, the stretch of the twist-pair product.
// Throws ParameterError for z < 2.
double stretch_from_z(int64_t z);

// round(sqrt(lambda) + 1/sqrt(lambda)); throws NotTwistPairStretchError if
// the rounded z does not reproduce lambda within 2% relative error.
int64_t z_from_stretch(double lambda);

}  // namespace diskmcg
