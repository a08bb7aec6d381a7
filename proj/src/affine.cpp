#include "diskmcg/affine.hpp"

#include <cmath>

namespace diskmcg {

AffineRep mul(const AffineRep& x, const AffineRep& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

std::pair<AffineRep, AffineRep> thurston_rep(int64_t z) {
    if (z < 0) throw ParameterError("intersection number must be nonnegative");
    return {AffineRep{1, z, 0, 1}, AffineRep{1, 0, -z, 1}};
}

NTClass classify(const AffineRep& m) {
    if (m.det() != 1) throw ParameterError("matrix is not unimodular");
    int64_t tr = m.trace();
    int64_t atr = tr < 0 ? -tr : tr;
    NTClass out;
    if (atr < 2) {
        out.kind = NTClass::elliptic;
    } else if (atr == 2) {
        out.kind = NTClass::parabolic;
    } else {
        out.kind = NTClass::hyperbolic;
        double t = static_cast<double>(atr);
        out.stretch = (t + std::sqrt(t * t - 4.0)) / 2.0;
    }
    return out;
}

double stretch_from_z(int64_t z) {
    if (z < 2) throw ParameterError("stretch_from_z requires z >= 2");
    double zd = static_cast<double>(z);
    return (zd * zd - 2.0 + zd * std::sqrt(zd * zd - 4.0)) / 2.0;
}

int64_t z_from_stretch(double lambda) {
    if (!(lambda >= 1.0)) throw ParameterError("stretch must be >= 1");
    double s = std::sqrt(lambda);
    int64_t z = static_cast<int64_t>(std::llround(s + 1.0 / s));
    if (z < 2)
        throw NotTwistPairStretchError("no intersection number matches stretch");
    double back = stretch_from_z(z);
    if (std::abs(back - lambda) / lambda > 0.02)
        throw NotTwistPairStretchError("no intersection number matches stretch");
    return z;
}

}  // namespace diskmcg
