#pragma once

#include <string_view>

#include "idealkit/dsl/ast.hpp"

namespace idealkit::dsl {

// script     := statement*
// statement  := "ring" NAME "=" expr ";"
//             | "ideal" NAME "=" expr ["in" NAME] ";"
//             | "let" NAME "=" expr ";"
//             | "use" NAME ";"
//             | "print" expr ";"
// expr       := term ("+" term)*
// term       := factor ("*" factor)*
// factor     := primary ("^" primary)*        left associative
// primary    := INT | NAME | NAME "(" args ")" | "(" args ")" | "[" args "]"
Script parse(std::string_view source);
Expr parse_expression(std::string_view source);

}  // namespace idealkit::dsl
