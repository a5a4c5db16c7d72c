#include "idealkit/dsl/lexer.hpp"

#include <cctype>

namespace idealkit::dsl {

std::vector<Token> tokenize(std::string_view source) {
  std::vector<Token> tokens;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  auto advance = [&] {
    if (source[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++i;
  };
  while (i < source.size()) {
    const char c = source[i];
    if (c == '#') {
      while (i < source.size() && source[i] != '\n') advance();
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    const SourceSpan span{line, column};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string text;
      while (i < source.size() && (std::isalnum(static_cast<unsigned char>(source[i])) || source[i] == '_')) {
        text += source[i];
        advance();
      }
      tokens.push_back({Token::Kind::identifier, std::move(text), span});
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text;
      while (i < source.size() && std::isdigit(static_cast<unsigned char>(source[i]))) {
        text += source[i];
        advance();
      }
      tokens.push_back({Token::Kind::integer, std::move(text), span});
    } else if (std::string_view("()[],;=+*^").find(c) != std::string_view::npos) {
      tokens.push_back({Token::Kind::symbol, std::string(1, c), span});
      advance();
    } else {
      throw ScriptError(ScriptError::Stage::lexical, span, "unexpected character '" + std::string(1, c) + "'");
    }
  }
  tokens.push_back({Token::Kind::end, "", {line, column}});
  return tokens;
}

}  // namespace idealkit::dsl
