#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zgb/poly.hpp"

namespace zgb {

struct ParseError : Error {
    ParseError(const std::string& msg, int line, int col)
        : Error(msg + " at line " + std::to_string(line) + ", column " +
                std::to_string(col)),
          line(line),
          col(col) {}
    int line, col;
};

struct IdealSource {
    std::string name;
    CtxPtr ctx;
    std::vector<Poly> generators;
    std::optional<std::vector<Poly>> expected;  // corpus goldens
};

// Grammar:
//   ring  ::= "ring" coeff "[" ident ("," ident)* "]"
//             "order" ("lp"|"dp"|"ls"|"ds") ";"
//   coeff ::= "ZZ" | "ZZ/" uint | "QQ"
//   ideal ::= "ideal" ident "=" poly ("," poly)* ";"
// Polynomials use + - * ^ with ^ binding tighter than *; coefficients are
// unsigned decimals of unbounded size (QQ additionally accepts num/den).
IdealSource parse_ideal_file(const std::string& text);

// Parse a single polynomial in an existing context (test/tool helper).
Poly parse_poly(const CtxPtr& ctx, const std::string& text);

std::string to_string(const Poly& p);
std::string to_string(const IdealSource& src);
std::string ordering_code(OrdKind k);  // lp/dp/ls/ds

}  // namespace zgb
