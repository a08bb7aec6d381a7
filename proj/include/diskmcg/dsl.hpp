#pragma once

#include <json.hpp>

#include <string>

#include "diskmcg/factorization.hpp"

namespace diskmcg {

// Parse or semantic failure, annotated with the 1-based source position.
struct ParseError : Error {
    int line, column;
    ParseError(const std::string& msg, int line_, int column_)
        : Error(msg + " at line " + std::to_string(line_) + ", column " +
                std::to_string(column_)),
          line(line_),
          column(column_) {}
};

// program := "surface(" INT ")" twist* command
// twist   := "tw{" INT ("," INT)* ("|" conj)? "}" ("^" INT)?
// conj    := ("s" INT ("^-1")?)+
// command := product | mult | relations-check | hurwitz | enumerate
//          | stretch | invariants | verify-unique
//          | family "(" INT "," INT "," INT "," INT ("|" INT*) ")"
struct Program {
    int surface_size = 0;
    Factorization monodromy;
    std::string command;
    std::vector<int64_t> family_params;  // n,k,p,q then exponents, family only
};

Program parse(const std::string& source);

// Round-trip printer: parse(print(p)) reproduces p.
std::string print(const Program& p);

struct RunFlags {
    int bound = 2;
    int dedupe_bound = 2;
    int threads = 1;
    int iters = 12;
    std::string seed_set;  // "{...}" override for the stretch seed curve
    std::string format = "json";
};

// Executes the program's command. The resulting document is key-sorted and
// fully determined by (program, flags): the "timing" block holds
// deterministic work counters, never wall-clock values.
nlohmann::json run(const Program& p, const RunFlags& flags);

// One archive line: {"n":5,"curves":[{"S":[2,3,4],"conj":""},...]}.
// Requires every curve to carry its conjugator word.
nlohmann::json archive_entry(const Factorization& F);
Factorization parse_archive_entry(const nlohmann::json& j);

// Flat key<TAB>value rendering of the JSON leaves.
std::string to_tsv(const nlohmann::json& j);

}  // namespace diskmcg
