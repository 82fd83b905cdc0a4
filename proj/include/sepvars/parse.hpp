#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sepvars/mpoly.hpp"

namespace sepvars {

struct ParseError : std::runtime_error {
    int line, column;
    ParseError(int line_, int column_, const std::string& what);
};

// Parses the expression grammar
//   expression := ['-'] term (('+'|'-') term)*
//   term       := factor ('*' factor)*
//   factor     := base ('^' nonneg-integer)?
//   base       := rational | variable | '(' expression ')'
//   rational   := integer ('/' positive-integer)?
// over the declared variable list. Whitespace is insignificant; implicit
// multiplication is a syntax error. Errors carry line and column.
MPoly parse_poly(const std::string& text, const std::vector<std::string>& vars);

// semicolon-separated generator list
std::vector<MPoly> parse_poly_list(const std::string& text,
                                   const std::vector<std::string>& vars);

}  // namespace sepvars
