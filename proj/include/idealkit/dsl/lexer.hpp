#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "idealkit/dsl/ast.hpp"

namespace idealkit::dsl {

struct Token {
  enum class Kind { identifier, integer, symbol, end };
  Kind kind;
  std::string text;
  SourceSpan span;
};

// Splits source text into tokens. `#` starts a comment running to the end of
// the line. Throws ScriptError on characters outside the grammar.
std::vector<Token> tokenize(std::string_view source);

}  // namespace idealkit::dsl
