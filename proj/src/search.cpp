#include "diskmcg/search.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <thread>

#include "diskmcg/growth.hpp"

namespace diskmcg {

namespace {

// ---- profile_multisets -----------------------------------------------------

struct ProfileSearch {
    int n;
    std::vector<int64_t> M;
    std::vector<std::vector<int64_t>> J;
    std::vector<HoleSet> viable;  // non-singleton sets that could carry a factor
    std::vector<int64_t> chosen;
    std::vector<std::vector<HoleSet>> out;

    void run() {
        for (uint32_t bits = 1; bits < (1u << n); ++bits) {
            HoleSet S(bits);
            if (S.size() < 2) continue;
            bool ok = true;
            std::vector<int> hs = S.holes();
            for (size_t a = 0; a < hs.size() && ok; ++a) {
                if (M[hs[a] - 1] == 0) ok = false;
                for (size_t b = a + 1; b < hs.size() && ok; ++b)
                    if (J[hs[a] - 1][hs[b] - 1] == 0) ok = false;
            }
            if (ok) viable.push_back(S);
        }
        chosen.assign(viable.size(), 0);
        rec(0);
    }

    void rec(size_t idx) {
        if (idx == viable.size()) {
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (J[i][j] != 0) return;
            std::vector<HoleSet> ms;
            for (int i = 0; i < n; ++i)
                for (int64_t c = 0; c < M[i]; ++c) ms.push_back(HoleSet::single(i + 1));
            for (size_t v = 0; v < viable.size(); ++v)
                for (int64_t c = 0; c < chosen[v]; ++c) ms.push_back(viable[v]);
            std::sort(ms.begin(), ms.end());
            out.push_back(std::move(ms));
            return;
        }
        HoleSet S = viable[idx];
        std::vector<int> hs = S.holes();
        int64_t cap = INT64_MAX;
        for (size_t a = 0; a < hs.size(); ++a) {
            cap = std::min(cap, M[hs[a] - 1]);
            for (size_t b = a + 1; b < hs.size(); ++b)
                cap = std::min(cap, J[hs[a] - 1][hs[b] - 1]);
        }
        for (int64_t c = 0; c <= cap; ++c) {
            if (c > 0) {
                for (size_t a = 0; a < hs.size(); ++a) {
                    M[hs[a] - 1] -= 1;
                    for (size_t b = a + 1; b < hs.size(); ++b) {
                        J[hs[a] - 1][hs[b] - 1] -= 1;
                        J[hs[b] - 1][hs[a] - 1] -= 1;
                    }
                }
            }
            chosen[idx] = c;
            rec(idx + 1);
        }
        // restore
        for (size_t a = 0; a < hs.size(); ++a) {
            M[hs[a] - 1] += cap;
            for (size_t b = a + 1; b < hs.size(); ++b) {
                J[hs[a] - 1][hs[b] - 1] += cap;
                J[hs[b] - 1][hs[a] - 1] += cap;
            }
        }
        chosen[idx] = 0;
    }
};

std::vector<SigmaWord> reduced_words_up_to(int n, int bound) {
    std::vector<int> alphabet;
    for (int j = 1; j <= n - 1; ++j) {
        alphabet.push_back(j);
        alphabet.push_back(-j);
    }
    std::vector<SigmaWord> out = {{}};
    size_t level_begin = 0;
    for (int len = 1; len <= bound; ++len) {
        size_t level_end = out.size();
        for (size_t i = level_begin; i < level_end; ++i)
            for (int x : alphabet) {
                if (!out[i].empty() && out[i].back() == -x) continue;
                SigmaWord w = out[i];
                w.push_back(x);
                out.push_back(std::move(w));
            }
        level_begin = level_end;
    }
    return out;
}

// round(r + 1/r): the matrix trace a twist pair of this growth rate would
// have; robust against the sub-percent drift of the estimator
int64_t trace_fingerprint(double r) { return std::llround(r + 1.0 / r); }

std::string signature_of(const Factorization& F) {
    std::vector<uint32_t> sets;
    std::vector<size_t> bigs;
    for (size_t i = 0; i < F.curves.size(); ++i) {
        sets.push_back(F.curves[i].enclosed.bits);
        if (F.curves[i].enclosed.size() > 1) bigs.push_back(i);
    }
    std::sort(sets.begin(), sets.end());
    std::vector<int64_t> traces;
    for (size_t a = 0; a < bigs.size(); ++a)
        for (size_t b = a + 1; b < bigs.size(); ++b) {
            const Curve& ca = F.curves[bigs[a]];
            const Curve& cb = F.curves[bigs[b]];
            MappingClass prod = compose(twist_about(ca), twist_about(cb));
            int64_t t = 2;
            try {
                t = trace_fingerprint(growth_rate(prod, ca, 4));
            } catch (const GrowthError&) {
            }
            traces.push_back(t);
        }
    std::sort(traces.begin(), traces.end());
    std::string sig = "S:";
    for (uint32_t s : sets) sig += std::to_string(s) + ",";
    sig += "T:";
    for (int64_t t : traces) sig += std::to_string(t) + ",";
    return sig;
}

struct Job {
    size_t multiset;   // index into multisets
    size_t ordering;   // index into orderings of that multiset
    long long block;   // number of assignments
    long long offset;  // global index of first assignment
};

}  // namespace

std::vector<std::vector<HoleSet>> profile_multisets(const MultiplicityProfile& p) {
    ProfileSearch ps;
    ps.n = p.n;
    ps.M = p.M;
    ps.J = p.J;
    if (ps.J.empty()) ps.J.assign(p.n, std::vector<int64_t>(p.n, 0));
    ps.run();
    return ps.out;
}

std::vector<Curve> enumerate_curves(int n, HoleSet S, int bound) {
    if (S.empty()) throw IndexError("curve must enclose a nonempty hole set");
    if (S.size() == 1) return {canonical_curve(n, S)};
    std::vector<Curve> out;
    std::map<std::vector<Letter>, bool> seen;
    for (const SigmaWord& w : reduced_words_up_to(n, bound)) {
        Curve c = conjugated_curve(n, S, w);
        if (seen.emplace(c.cls.letters, true).second) out.push_back(std::move(c));
    }
    return out;
}

std::vector<FactorizationClass> enumerate_factorizations(const Factorization& target,
                                                         const SearchConfig& cfg,
                                                         SearchStats* stats) {
    if (target.curves.empty()) throw ParameterError("target factorization is empty");
    if (cfg.conjugator_bound < 0 || cfg.dedupe_bound < 0 || cfg.workers < 0)
        throw ParameterError("search bounds must be nonnegative");
    const int n = target.n;
    MultiplicityProfile prof = multiplicity_profile(target);
    MappingClass phi = product(target);

    std::vector<std::vector<HoleSet>> multisets = profile_multisets(prof);

    // candidate pool per distinct non-singleton set: bounded conjugates that
    // still enclose the set, plus the target's own curves (completeness)
    std::map<HoleSet, std::vector<Curve>> pools;
    auto pool_for = [&](HoleSet S) -> std::vector<Curve>& {
        auto it = pools.find(S);
        if (it != pools.end()) return it->second;
        std::vector<Curve> pool;
        for (Curve& c : enumerate_curves(n, S, cfg.conjugator_bound))
            if (c.enclosed == S) pool.push_back(std::move(c));
        for (const Curve& c : target.curves) {
            if (c.enclosed != S) continue;
            bool present = false;
            for (const Curve& q : pool)
                if (same_class(q, c)) present = true;
            if (!present) pool.push_back(c);
        }
        return pools.emplace(S, std::move(pool)).first->second;
    };

    // per multiset: sorted boundary singletons up front, orderings of the rest
    struct Plan {
        std::vector<HoleSet> singles;
        std::vector<std::vector<HoleSet>> orderings;
    };
    std::vector<Plan> plans(multisets.size());
    std::vector<Job> jobs;
    long long total = 0;
    for (size_t mi = 0; mi < multisets.size(); ++mi) {
        Plan& pl = plans[mi];
        std::vector<HoleSet> bigs;
        for (HoleSet S : multisets[mi])
            (S.size() == 1 ? pl.singles : bigs).push_back(S);
        std::sort(bigs.begin(), bigs.end());
        std::vector<HoleSet> ord = bigs;
        do {
            pl.orderings.push_back(ord);
        } while (std::next_permutation(ord.begin(), ord.end()));
        for (size_t oi = 0; oi < pl.orderings.size(); ++oi) {
            long long block = 1;
            for (HoleSet S : pl.orderings[oi]) {
                block *= static_cast<long long>(pool_for(S).size());
                if (block > cfg.ceiling) break;
            }
            if (block == 0) continue;
            if (total + block > cfg.ceiling)
                throw ResourceLimitError("candidate ceiling exceeded", total + block,
                                         cfg.ceiling);
            jobs.push_back({mi, oi, block, total});
            total += block;
        }
    }
    if (stats) stats->candidates_planned = total;

    // central boundary twists contribute only framing; precompute per multiset
    std::vector<MappingClass> single_prods(multisets.size());
    for (size_t mi = 0; mi < multisets.size(); ++mi) {
        MappingClass m = MappingClass::identity(n);
        for (HoleSet S : plans[mi].singles) m.framing[S.min() - 1] += 1;
        single_prods[mi] = m;
    }

    auto scan_range = [&](long long lo, long long hi,
                          std::vector<std::pair<long long, Factorization>>& found) {
        for (const Job& job : jobs) {
            long long jlo = std::max(lo, job.offset);
            long long jhi = std::min(hi, job.offset + job.block);
            if (jlo >= jhi) continue;
            const Plan& pl = plans[job.multiset];
            const std::vector<HoleSet>& ord = pl.orderings[job.ordering];
            size_t k = ord.size();
            std::vector<const std::vector<Curve>*> slot_pools(k);
            std::vector<std::vector<MappingClass>> slot_twists(k);
            for (size_t s = 0; s < k; ++s) {
                slot_pools[s] = &pool_for(ord[s]);
                for (const Curve& c : *slot_pools[s])
                    slot_twists[s].push_back(twist_about(c));
            }
            std::vector<long long> digits(k, 0);
            // prefix[s] = product of singles and the first s assigned twists
            std::vector<MappingClass> prefix(k + 1);
            prefix[0] = single_prods[job.multiset];
            auto recompute_from = [&](size_t s) {
                for (size_t t = s; t < k; ++t)
                    prefix[t + 1] = compose(prefix[t], slot_twists[t][digits[t]]);
            };
            long long rem = jlo - job.offset;
            for (size_t s = k; s-- > 0;) {
                digits[s] = rem % static_cast<long long>(slot_pools[s]->size());
                rem /= static_cast<long long>(slot_pools[s]->size());
            }
            recompute_from(0);
            for (long long g = jlo; g < jhi; ++g) {
                if (equals(prefix[k], phi)) {
                    Factorization F;
                    F.n = n;
                    for (HoleSet S : pl.singles)
                        F.curves.push_back(canonical_curve(n, S));
                    for (size_t s = 0; s < k; ++s)
                        F.curves.push_back((*slot_pools[s])[digits[s]]);
                    found.emplace_back(g, std::move(F));
                }
                if (g + 1 == jhi) break;
                size_t s = k;
                while (s-- > 0) {
                    if (++digits[s] < static_cast<long long>(slot_pools[s]->size())) break;
                    digits[s] = 0;
                }
                recompute_from(s);
            }
        }
    };

    // warm the pool cache before sharing it read-only across workers
    for (const Job& job : jobs)
        for (HoleSet S : plans[job.multiset].orderings[job.ordering]) pool_for(S);

    std::vector<std::pair<long long, Factorization>> matches;
    int workers = std::max(1, cfg.workers);
    if (workers == 1 || total < 2) {
        scan_range(0, total, matches);
    } else {
        std::vector<std::vector<std::pair<long long, Factorization>>> parts(workers);
        std::vector<std::thread> threads;
        long long chunk = (total + workers - 1) / workers;
        for (int wi = 0; wi < workers; ++wi) {
            long long lo = wi * chunk, hi = std::min(total, lo + chunk);
            threads.emplace_back([&, lo, hi, wi] { scan_range(lo, hi, parts[wi]); });
        }
        for (auto& t : threads) t.join();
        for (auto& part : parts)
            for (auto& m : part) matches.push_back(std::move(m));
        std::sort(matches.begin(), matches.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    if (stats) stats->matches_found = static_cast<long long>(matches.size());

    // group matches into classes by signature, then bounded conjugation
    std::vector<MappingClass> conjugators;
    for (const SigmaWord& w : reduced_words_up_to(n, cfg.dedupe_bound))
        conjugators.push_back(sigma_word_class(n, w));

    auto conjugate_match = [&](const Factorization& rep, const Factorization& cand) {
        for (const MappingClass& g : conjugators) {
            bool ok = true;
            std::vector<uint32_t> rs, cs;
            for (size_t i = 0; i < rep.curves.size() && ok; ++i) {
                const Curve& rc = rep.curves[i];
                const Curve& cc = cand.curves[i];
                if (rc.enclosed.size() == 1) {
                    // central factors: compare as multisets below
                    rs.push_back(HoleSet::single(g.perm[rc.enclosed.min() - 1]).bits);
                    cs.push_back(cc.enclosed.bits);
                    continue;
                }
                if (!same_class(apply(g, rc), cc)) ok = false;
            }
            if (!ok) continue;
            std::sort(rs.begin(), rs.end());
            std::sort(cs.begin(), cs.end());
            if (rs == cs) return true;
        }
        return false;
    };

    std::vector<FactorizationClass> classes;
    for (auto& [idx, F] : matches) {
        std::string sig = signature_of(F);
        bool merged = false;
        for (FactorizationClass& cls : classes) {
            if (cls.signature != sig) continue;
            if (conjugate_match(cls.representative, F)) {
                cls.members_found += 1;
                merged = true;
                break;
            }
        }
        if (!merged) {
            FactorizationClass cls;
            cls.representative = std::move(F);
            cls.signature = std::move(sig);
            cls.members_found = 1;
            classes.push_back(std::move(cls));
        }
    }
    for (size_t a = 0; a < classes.size(); ++a)
        for (size_t b = a + 1; b < classes.size(); ++b)
            if (classes[a].signature == classes[b].signature)
                classes[a].possibly_equivalent = classes[b].possibly_equivalent = true;
    return classes;
}

UniqueFillingReport verify_unique_filling(const Factorization& target,
                                          const SearchConfig& cfg) {
    UniqueFillingReport rep;
    rep.classes = enumerate_factorizations(target, cfg, &rep.stats);
    rep.class_count = static_cast<long long>(rep.classes.size());
    rep.all_invariants_equal = true;
    for (const FactorizationClass& cls : rep.classes) {
        rep.invariants.push_back(h1(cls.representative));
        if (!compare_invariants(rep.invariants.front(), rep.invariants.back()))
            rep.all_invariants_equal = false;
    }
    return rep;
}

}  // namespace diskmcg
