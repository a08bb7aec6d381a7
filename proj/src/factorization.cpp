#include "diskmcg/factorization.hpp"

namespace diskmcg {

MappingClass product(const Factorization& F) {
    MappingClass out = MappingClass::identity(F.n);
    for (const Curve& c : F.curves) {
        if (c.n != F.n) throw SizeMismatchError("product: curve size mismatch");
        out = compose(out, twist_about(c));
    }
    return out;
}

MultiplicityProfile multiplicity_profile(const Factorization& F) {
    MultiplicityProfile p;
    p.n = F.n;
    p.M.assign(F.n, 0);
    p.J.assign(F.n, std::vector<int64_t>(F.n, 0));
    for (const Curve& c : F.curves) {
        std::vector<int> hs = c.enclosed.holes();
        for (size_t a = 0; a < hs.size(); ++a) {
            p.M[hs[a] - 1] += 1;
            for (size_t b = a + 1; b < hs.size(); ++b) {
                p.J[hs[a] - 1][hs[b] - 1] += 1;
                p.J[hs[b] - 1][hs[a] - 1] += 1;
            }
        }
    }
    return p;
}

Factorization hurwitz_move(const Factorization& F, int i) {
    if (i < 1 || static_cast<size_t>(i) >= F.curves.size())
        throw IndexError("hurwitz position out of range");
    Factorization out = F;
    const Curve& a = F.curves[i - 1];
    const Curve& b = F.curves[i];
    out.curves[i - 1] = b;
    out.curves[i] = apply(invert(twist_about(b)), a);
    return out;
}

Factorization hurwitz_inverse(const Factorization& F, int i) {
    if (i < 1 || static_cast<size_t>(i) >= F.curves.size())
        throw IndexError("hurwitz position out of range");
    Factorization out = F;
    const Curve& a = F.curves[i - 1];
    const Curve& b = F.curves[i];
    out.curves[i - 1] = apply(twist_about(a), b);
    out.curves[i] = a;
    return out;
}

Factorization global_conjugate(const Factorization& F, const MappingClass& f) {
    if (F.n != f.n) throw SizeMismatchError("global_conjugate: size mismatch");
    Factorization out;
    out.n = F.n;
    out.curves.reserve(F.curves.size());
    for (const Curve& c : F.curves) out.curves.push_back(apply(f, c));
    return out;
}

bool verify_relation_disjoint(const Curve& A, const Curve& B) {
    MappingClass ta = twist_about(A), tb = twist_about(B);
    return equals(compose(ta, tb), compose(tb, ta));
}

LanternResult verify_relation_lantern(int n, HoleSet A, HoleSet B, HoleSet C,
                                      int bound) {
    if (!(A.disjoint_from(B) && A.disjoint_from(C) && B.disjoint_from(C)))
        throw ParameterError("lantern sets must be pairwise disjoint");
    HoleSet AB = A.united(B), BC = B.united(C), AC = A.united(C);
    HoleSet ABC = AB.united(C);

    MappingClass lhs = compose(
        compose(compose(convex_twist(n, A), convex_twist(n, B)), convex_twist(n, C)),
        convex_twist(n, ABC));
    MappingClass head = compose(convex_twist(n, AB), convex_twist(n, BC));

    // letters +j then -j, j ascending; words enumerated shortest first
    std::vector<int> alphabet;
    for (int j = 1; j <= n - 1; ++j) {
        alphabet.push_back(j);
        alphabet.push_back(-j);
    }
    std::vector<SigmaWord> frontier = {{}};
    for (int len = 0; len <= bound; ++len) {
        for (const SigmaWord& w : frontier) {
            Curve cand = conjugated_curve(n, AC, w);
            if (cand.enclosed != AC) continue;
            if (equals(lhs, compose(head, twist_about(cand)))) {
                LanternResult r;
                r.ok = true;
                r.witness = cand;
                return r;
            }
        }
        if (len == bound) break;
        std::vector<SigmaWord> next;
        next.reserve(frontier.size() * alphabet.size());
        for (const SigmaWord& w : frontier)
            for (int x : alphabet) {
                if (!w.empty() && w.back() == -x) continue;  // freely reducible
                SigmaWord w2 = w;
                w2.push_back(x);
                next.push_back(std::move(w2));
            }
        frontier = std::move(next);
    }
    return {};
}

}  // namespace diskmcg
