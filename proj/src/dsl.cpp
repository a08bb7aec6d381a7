#include "diskmcg/dsl.hpp"

#include <functional>
#include <sstream>

#include "diskmcg/affine.hpp"
#include "diskmcg/families.hpp"
#include "diskmcg/filling.hpp"
#include "diskmcg/growth.hpp"
#include "diskmcg/search.hpp"

namespace diskmcg {

namespace {

struct Lexer {
    const std::string& src;
    size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& s) : src(s) {}

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }

    void skip_ws() {
        while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t' || src[pos] == '\n' ||
                                    src[pos] == '\r')) {
            if (src[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++pos;
        }
    }

    bool eof() {
        skip_ws();
        return pos >= src.size();
    }

    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    void advance() {
        ++pos;
        ++col;
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    bool accept(char c) {
        if (peek() != c) return false;
        advance();
        return true;
    }

    int64_t integer() {
        skip_ws();
        bool neg = false;
        if (pos < src.size() && src[pos] == '-') {
            neg = true;
            advance();
        }
        if (pos >= src.size() || !isdigit(static_cast<unsigned char>(src[pos])))
            fail("expected integer");
        int64_t v = 0;
        while (pos < src.size() && isdigit(static_cast<unsigned char>(src[pos]))) {
            v = v * 10 + (src[pos] - '0');
            if (v > 1000000000) fail("integer too large");
            advance();
        }
        return neg ? -v : v;
    }

    std::string word() {
        skip_ws();
        std::string w;
        while (pos < src.size() &&
               (isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '-' ||
                src[pos] == '_')) {
            w += src[pos];
            advance();
        }
        if (w.empty()) fail("expected identifier");
        return w;
    }
};

SigmaWord parse_conj_string(const std::string& s, int n) {
    Lexer lex(s);
    SigmaWord w;
    while (!lex.eof()) {
        if (!lex.accept('s')) lex.fail("expected 's'");
        int64_t j = lex.integer();
        if (j < 1 || j > n - 1) lex.fail("half-twist index out of range");
        int sign = 1;
        if (lex.accept('^')) {
            if (lex.integer() != -1) lex.fail("only exponent -1 is allowed");
            sign = -1;
        }
        w.push_back(static_cast<int>(j) * sign);
    }
    return w;
}

std::string conj_to_string(const SigmaWord& w) {
    std::string out;
    for (int x : w) {
        if (!out.empty()) out += ' ';
        out += 's' + std::to_string(x < 0 ? -x : x);
        if (x < 0) out += "^-1";
    }
    return out;
}

HoleSet parse_hole_set(const std::string& s, int n) {
    Lexer lex(s);
    lex.expect('{');
    HoleSet S;
    while (true) {
        int64_t h = lex.integer();
        if (h < 1 || h > n) lex.fail("hole index out of range");
        S.add(static_cast<int>(h));
        if (!lex.accept(',')) break;
    }
    lex.expect('}');
    if (!lex.eof()) lex.fail("trailing characters");
    return S;
}

nlohmann::json curve_json(const Curve& c) {
    nlohmann::json j;
    j["S"] = c.enclosed.holes();
    if (c.conjugator_word)
        j["conj"] = conj_to_string(*c.conjugator_word);
    else
        j["class"] = to_string(c.cls);
    return j;
}

nlohmann::json invariants_json(const FillingInvariants& inv) {
    nlohmann::json j;
    j["euler"] = inv.euler;
    j["h1_rank"] = inv.h1_rank;
    j["h1_torsion"] = inv.h1_torsion;
    return j;
}

Curve seed_curve(const Program& p, const RunFlags& flags) {
    if (!flags.seed_set.empty())
        return canonical_curve(p.surface_size, parse_hole_set(flags.seed_set, p.surface_size));
    for (const Curve& c : p.monodromy.curves)
        if (c.enclosed.size() > 1) return c;
    if (!p.monodromy.curves.empty()) return p.monodromy.curves.front();
    throw ParameterError("no seed curve available");
}

}  // namespace

Program parse(const std::string& source) {
    Lexer lex(source);
    Program p;
    if (lex.word() != "surface") lex.fail("program must start with surface(n)");
    lex.expect('(');
    int64_t n = lex.integer();
    if (n < 1 || n > 31) lex.fail("surface size out of range");
    lex.expect(')');
    p.surface_size = static_cast<int>(n);
    p.monodromy.n = p.surface_size;

    while (true) {
        size_t save = lex.pos;
        int sl = lex.line, sc = lex.col;
        if (lex.eof()) lex.fail("missing command");
        std::string tok = lex.word();
        if (tok == "tw") {
            lex.expect('{');
            HoleSet S;
            while (true) {
                int64_t h = lex.integer();
                if (h < 1 || h > n) lex.fail("hole index out of range");
                S.add(static_cast<int>(h));
                if (!lex.accept(',')) break;
            }
            SigmaWord conj;
            if (lex.accept('|')) {
                while (lex.peek() == 's') {
                    lex.advance();
                    int64_t j = lex.integer();
                    if (j < 1 || j > n - 1) lex.fail("half-twist index out of range");
                    int sign = 1;
                    size_t mark = lex.pos;
                    int ml = lex.line, mc = lex.col;
                    if (lex.accept('^')) {
                        if (lex.peek() == '-') {
                            if (lex.integer() != -1) lex.fail("only exponent -1 is allowed");
                            sign = -1;
                        } else {  // the '^' belongs to the twist exponent
                            lex.pos = mark;
                            lex.line = ml;
                            lex.col = mc;
                        }
                    }
                    conj.push_back(static_cast<int>(j) * sign);
                }
            }
            lex.expect('}');
            int64_t e = 1;
            if (lex.accept('^')) {
                e = lex.integer();
                if (e < 1) lex.fail("twist exponent must be positive");
            }
            Curve c = conjugated_curve(p.surface_size, S, conj);
            for (int64_t r = 0; r < e; ++r) p.monodromy.curves.push_back(c);
        } else if (tok == "family") {
            lex.expect('(');
            for (int i = 0; i < 4; ++i) {
                p.family_params.push_back(lex.integer());
                if (i < 3) lex.expect(',');
            }
            lex.expect('|');
            while (lex.peek() != ')') p.family_params.push_back(lex.integer());
            lex.expect(')');
            p.command = "family";
            if (!lex.eof()) lex.fail("trailing input after command");
            return p;
        } else {
            static const char* kCommands[] = {"product",   "mult",      "relations-check",
                                              "hurwitz",   "enumerate", "stretch",
                                              "invariants", "verify-unique"};
            bool known = false;
            for (const char* c : kCommands)
                if (tok == c) known = true;
            if (!known) {
                lex.pos = save;
                lex.line = sl;
                lex.col = sc;
                lex.fail("unknown command or statement '" + tok + "'");
            }
            p.command = tok;
            if (!lex.eof()) lex.fail("trailing input after command");
            return p;
        }
    }
}

std::string print(const Program& p) {
    std::string out = "surface(" + std::to_string(p.surface_size) + ")";
    if (p.command == "family") {
        out += " family(";
        for (int i = 0; i < 4; ++i) out += std::to_string(p.family_params[i]) + (i < 3 ? "," : "");
        out += "|";
        for (size_t i = 4; i < p.family_params.size(); ++i)
            out += (i > 4 ? " " : "") + std::to_string(p.family_params[i]);
        return out + ")";
    }
    for (const Curve& c : p.monodromy.curves) {
        out += " tw{";
        std::string sep;
        for (int h : c.enclosed.holes()) {
            out += sep + std::to_string(h);
            sep = ",";
        }
        if (c.conjugator_word && !c.conjugator_word->empty())
            out += "|" + conj_to_string(*c.conjugator_word);
        out += "}";
    }
    return out + " " + p.command;
}

nlohmann::json archive_entry(const Factorization& F) {
    nlohmann::json curves = nlohmann::json::array();
    for (const Curve& c : F.curves) {
        if (!c.conjugator_word)
            throw ParameterError("curve lacks a conjugator word for archiving");
        curves.push_back({{"S", c.enclosed.holes()}, {"conj", conj_to_string(*c.conjugator_word)}});
    }
    return {{"n", F.n}, {"curves", curves}};
}

Factorization parse_archive_entry(const nlohmann::json& j) {
    Factorization F;
    F.n = j.at("n").get<int>();
    for (const auto& cj : j.at("curves")) {
        HoleSet S;
        for (int h : cj.at("S").get<std::vector<int>>()) {
            if (h < 1 || h > F.n) throw ParameterError("archive hole index out of range");
            S.add(h);
        }
        SigmaWord w = parse_conj_string(cj.at("conj").get<std::string>(), F.n);
        // the archive stores the conjugate's original set: recover the
        // pre-conjugation set as the preimage under the word's permutation
        MappingClass g = sigma_word_class(F.n, w);
        HoleSet pre;
        for (int i = 1; i <= F.n; ++i)
            if (S.contains(g.perm[i - 1])) pre.add(i);
        F.curves.push_back(conjugated_curve(F.n, pre, w));
    }
    return F;
}

std::string to_tsv(const nlohmann::json& j) {
    std::string out;
    std::function<void(const nlohmann::json&, const std::string&)> walk =
        [&](const nlohmann::json& node, const std::string& path) {
            if (node.is_object()) {
                for (auto it = node.begin(); it != node.end(); ++it)
                    walk(it.value(), path.empty() ? it.key() : path + "." + it.key());
            } else if (node.is_array()) {
                int i = 0;
                for (const auto& v : node) walk(v, path + "[" + std::to_string(i++) + "]");
                if (node.empty()) out += path + "\t[]\n";
            } else {
                out += path + "\t" + node.dump() + "\n";
            }
        };
    walk(j, "");
    return out;
}

nlohmann::json run(const Program& p, const RunFlags& flags) {
    nlohmann::json doc;
    doc["command"] = p.command;
    doc["surface"] = p.surface_size;
    doc["inputs"] = {{"program", print(p)}};
    doc["bounds_used"] = {{"bound", flags.bound},
                          {"dedupe_bound", flags.dedupe_bound},
                          {"iters", flags.iters}};
    nlohmann::json results;
    nlohmann::json timing;
    timing["factors"] = p.monodromy.curves.size();
    const Factorization& F = p.monodromy;

    if (p.command == "product") {
        MappingClass m = product(F);
        std::vector<std::string> images;
        for (const Word& w : m.images) images.push_back(to_string(w));
        results["images"] = images;
        results["framing"] = m.framing;
        results["perm"] = m.perm;
        results["pure"] = m.is_pure();
    } else if (p.command == "mult") {
        MultiplicityProfile prof = multiplicity_profile(F);
        results["M"] = prof.M;
        nlohmann::json J = nlohmann::json::object();
        for (int i = 1; i <= p.surface_size; ++i)
            for (int jx = i + 1; jx <= p.surface_size; ++jx)
                if (prof.J[i - 1][jx - 1] != 0)
                    J[std::to_string(i) + "," + std::to_string(jx)] = prof.J[i - 1][jx - 1];
        results["J"] = J;
    } else if (p.command == "relations-check") {
        int n = p.surface_size;
        long long checked = 0, ok = 0;
        for (uint32_t a = 1; a < (1u << n); ++a)
            for (uint32_t b = a + 1; b < (1u << n); ++b) {
                HoleSet A(a), B(b);
                bool nested = A.subset_of(B) || B.subset_of(A);
                bool separated = A.disjoint_from(B) && (A.max() < B.min() || B.max() < A.min());
                if (!nested && !separated) continue;
                ++checked;
                if (verify_relation_disjoint(canonical_curve(n, A), canonical_curve(n, B))) ++ok;
            }
        results["disjoint_pairs_checked"] = checked;
        results["disjoint_pairs_ok"] = ok;
        nlohmann::json lanterns = nlohmann::json::array();
        bool all_lanterns = true;
        for (int i = 1; i + 2 <= n; ++i) {
            LanternResult r = verify_relation_lantern(n, HoleSet::single(i),
                                                      HoleSet::single(i + 1),
                                                      HoleSet::single(i + 2), flags.bound);
            nlohmann::json lj;
            lj["triple"] = {i, i + 1, i + 2};
            lj["ok"] = r.ok;
            if (r.witness) lj["witness"] = curve_json(*r.witness);
            lanterns.push_back(lj);
            all_lanterns = all_lanterns && r.ok;
        }
        results["lanterns"] = lanterns;
        results["all_ok"] = (checked == ok) && all_lanterns;
        timing["pairs_checked"] = checked;
    } else if (p.command == "hurwitz") {
        MappingClass phi = product(F);
        nlohmann::json moves = nlohmann::json::array();
        for (int i = 1; i + 1 <= static_cast<int>(F.curves.size()); ++i) {
            Factorization G = hurwitz_move(F, i);
            nlohmann::json mj;
            mj["position"] = i;
            std::vector<std::string> classes;
            for (const Curve& c : G.curves) classes.push_back(to_string(c.cls));
            mj["classes"] = classes;
            mj["product_preserved"] = equals(product(G), phi);
            moves.push_back(mj);
        }
        results["moves"] = moves;
    } else if (p.command == "enumerate" || p.command == "verify-unique") {
        SearchConfig cfg;
        cfg.conjugator_bound = flags.bound;
        cfg.dedupe_bound = flags.dedupe_bound;
        cfg.workers = flags.threads;
        UniqueFillingReport rep = verify_unique_filling(F, cfg);
        nlohmann::json classes = nlohmann::json::array();
        for (size_t i = 0; i < rep.classes.size(); ++i) {
            const FactorizationClass& cls = rep.classes[i];
            nlohmann::json cj;
            nlohmann::json curves = nlohmann::json::array();
            for (const Curve& c : cls.representative.curves) curves.push_back(curve_json(c));
            cj["curves"] = curves;
            cj["members_found"] = cls.members_found;
            cj["possibly_equivalent"] = cls.possibly_equivalent;
            cj["invariants"] = invariants_json(rep.invariants[i]);
            classes.push_back(cj);
        }
        results["classes"] = classes;
        results["class_count"] = rep.class_count;
        results["all_invariants_equal"] = rep.all_invariants_equal;
        timing["candidates_planned"] = rep.stats.candidates_planned;
        timing["matches_found"] = rep.stats.matches_found;
    } else if (p.command == "stretch") {
        Curve seed = seed_curve(p, flags);
        double r = growth_rate(product(F), seed, flags.iters);
        results["growth"] = r;
        results["seed"] = curve_json(seed);
        try {
            results["z"] = z_from_stretch(r);
        } catch (const NotTwistPairStretchError&) {
            results["z"] = nullptr;
        }
        timing["iterations"] = flags.iters;
    } else if (p.command == "invariants") {
        results = invariants_json(h1(F));
    } else if (p.command == "family") {
        if (p.family_params.size() < 4) throw ParameterError("family needs n,k,p,q");
        int n = static_cast<int>(p.family_params[0]);
        int k = static_cast<int>(p.family_params[1]);
        int fp = static_cast<int>(p.family_params[2]);
        int q = static_cast<int>(p.family_params[3]);
        std::vector<int64_t> m(p.family_params.begin() + 4, p.family_params.end());
        Factorization fam = paper_family(n, k, fp, q, m);
        if (fam.n != p.surface_size)
            throw ParameterError("surface size does not match n+p+q");
        results["factorization"] = archive_entry(fam);
        MultiplicityProfile prof = multiplicity_profile(fam);
        results["M"] = prof.M;
        results["invariants"] = invariants_json(h1(fam));
        timing["factors"] = fam.curves.size();
    } else {
        throw ParameterError("unknown command: " + p.command);
    }
    doc["results"] = results;
    doc["timing"] = timing;
    return doc;
}

}  // namespace diskmcg
