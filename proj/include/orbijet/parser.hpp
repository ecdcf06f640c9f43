#ifndef ORBIJET_PARSER_HPP
#define ORBIJET_PARSER_HPP

#include <string>
#include <string_view>
#include <vector>

#include <orbijet/jetpoly.hpp>
#include <orbijet/jetscheme.hpp>

namespace orbijet
{

// Polynomial expressions over named level-0 variables:
//
//   expr   := ["-"] term (("+"|"-") term)*
//   term   := factor ("*" factor)*
//   factor := base ("^" nat)?
//   base   := ident | rational | "zeta" | "(" expr ")"
//
// The identifier at position i of vars denotes x[i+1, 0]; zeta is zeta_m.
JetPoly parse_polynomial(std::string_view src, const std::vector<std::string> &vars, int order);

// Inverse of parse_polynomial for level-0 polynomials.
std::string to_expression(const JetPoly &p, const std::vector<std::string> &vars);

// {"m": int, "variables": [string], "relations": [string], "exponents": [int]}
struct SpecFile {
    int m = 1;
    std::vector<std::string> variables;
    std::vector<std::string> relations;
    std::vector<int> exponents;

    SchemeSpec scheme() const;
    DiagAutomorphism automorphism() const;
};

SpecFile parse_spec_json(const std::string &text);
SpecFile load_spec_file(const std::string &path);

} // namespace orbijet

#endif
