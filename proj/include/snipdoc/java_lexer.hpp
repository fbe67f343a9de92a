// Copyright 2026 The snipdoc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SNIPDOC_JAVA_LEXER_HPP
#define SNIPDOC_JAVA_LEXER_HPP

#include <array>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "snipdoc/common.hpp"

namespace snipdoc {

enum class TokenKind {
  identifier,  // keywords included
  number,
  string,      // string literals and text blocks
  character,
  op,          // operators and punctuation
  line_comment,
  block_comment,
  javadoc,
};

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t offset;    // byte offset of the first character
  std::size_t line;      // 1-based line of the first character
  std::size_t end_line;  // 1-based line of the last character

  bool is_comment() const {
    return kind == TokenKind::line_comment ||
           kind == TokenKind::block_comment || kind == TokenKind::javadoc;
  }
  std::size_t end_offset() const { return offset + text.size(); }
};

inline bool is_java_keyword(std::string_view word) {
  static const std::unordered_set<std::string_view> kKeywords = {
      "abstract",   "assert",       "boolean",   "break",      "byte",
      "case",       "catch",        "char",      "class",      "const",
      "continue",   "default",      "do",        "double",     "else",
      "enum",       "extends",      "final",     "finally",    "float",
      "for",        "goto",         "if",        "implements", "import",
      "instanceof", "int",          "interface", "long",       "native",
      "new",        "package",      "private",   "protected",  "public",
      "return",     "short",        "static",    "strictfp",   "super",
      "switch",     "synchronized", "this",      "throw",      "throws",
      "transient",  "try",          "void",      "volatile",   "while",
      "true",       "false",        "null"};
  return kKeywords.contains(word);
}

namespace detail {

inline bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
         c == '$' || static_cast<unsigned char>(c) >= 0x80;
}

inline bool is_ident_part(char c) {
  return is_ident_start(c) || (c >= '0' && c <= '9');
}

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
        ++pos_;
        continue;
      }
      const std::size_t start = pos_;
      const std::size_t start_line = line_;
      TokenKind kind;
      if (c == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
        kind = TokenKind::line_comment;
      } else if (c == '/' && peek(1) == '*') {
        // "/**/" is an empty block comment, not documentation.
        kind = (peek(2) == '*' && peek(3) != '/') ? TokenKind::javadoc
                                                  : TokenKind::block_comment;
        const std::size_t close = src_.find("*/", pos_ + 2);
        if (close == std::string_view::npos) {
          throw ExtractionError("unterminated block comment", start,
                                start_line);
        }
        advance_to(close + 2);
      } else if (c == '"') {
        kind = TokenKind::string;
        if (peek(1) == '"' && peek(2) == '"') {
          lex_text_block();
        } else {
          lex_quoted('"');
        }
      } else if (c == '\'') {
        kind = TokenKind::character;
        lex_quoted('\'');
      } else if (is_digit(c) || (c == '.' && is_digit(peek(1)))) {
        kind = TokenKind::number;
        lex_number();
      } else if (is_ident_start(c)) {
        kind = TokenKind::identifier;
        while (pos_ < src_.size() && is_ident_part(src_[pos_])) ++pos_;
      } else {
        kind = TokenKind::op;
        lex_operator();
      }
      out.push_back(Token{kind, std::string(src_.substr(start, pos_ - start)),
                          start, start_line, line_});
    }
    return out;
  }

 private:
  char peek(std::size_t ahead) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void advance_to(std::size_t target) {
    while (pos_ < target) {
      if (src_[pos_] == '\n') ++line_;
      ++pos_;
    }
  }

  // Unterminated literals end at the newline, as javac would reject them.
  void lex_quoted(char quote) {
    ++pos_;
    while (pos_ < src_.size()) {
      const char ch = src_[pos_];
      if (ch == '\\' && pos_ + 1 < src_.size() && src_[pos_ + 1] != '\n') {
        pos_ += 2;
      } else if (ch == quote) {
        ++pos_;
        return;
      } else if (ch == '\n') {
        return;
      } else {
        ++pos_;
      }
    }
  }

  void lex_text_block() {
    advance_to(pos_ + 3);
    while (pos_ < src_.size()) {
      if (src_[pos_] == '\\' && pos_ + 1 < src_.size()) {
        advance_to(pos_ + 2);
      } else if (src_.substr(pos_, 3) == "\"\"\"") {
        advance_to(pos_ + 3);
        return;
      } else {
        advance_to(pos_ + 1);
      }
    }
  }

  void lex_number() {
    const bool hex = src_[pos_] == '0' && (peek(1) == 'x' || peek(1) == 'X');
    while (pos_ < src_.size()) {
      const char ch = src_[pos_];
      if (is_ident_part(ch) || ch == '.') {
        ++pos_;
      } else if ((ch == '+' || ch == '-') && pos_ > 0) {
        const char prev = src_[pos_ - 1];
        const bool exponent = hex ? (prev == 'p' || prev == 'P')
                                  : (prev == 'e' || prev == 'E');
        if (!exponent) return;
        ++pos_;
      } else {
        return;
      }
    }
  }

  void lex_operator() {
    static constexpr std::array<std::string_view, 25> kOperators = {
        ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "++", "--",
        "&&",   "||",  "==",  "!=",  "<=",  ">=", "+=", "-=", "*=",
        "/=",   "&=",  "|=",  "^=",  "%=",  "<<", ">>"};
    for (std::string_view candidate : kOperators) {
      if (src_.substr(pos_, candidate.size()) == candidate) {
        pos_ += candidate.size();
        return;
      }
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

}  // namespace detail

/// Lexes Java source into tokens, comments included. Throws
/// ExtractionError on an unterminated block comment.
inline std::vector<Token> lex_java(std::string_view source) {
  return detail::Lexer(source).run();
}

/// Lexical tokens of `text`: identifiers, keywords, literals, operators and
/// punctuation. Whitespace and comments are dropped; unknown characters
/// become single-character tokens. Never throws: an unterminated block
/// comment swallows the rest of the input.
inline std::vector<std::string> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  try {
    tokens = lex_java(text);
  } catch (const ExtractionError& e) {
    tokens = lex_java(text.substr(0, e.offset()));
  }
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (Token& t : tokens) {
    if (!t.is_comment()) out.push_back(std::move(t.text));
  }
  return out;
}

}  // namespace snipdoc

#endif  // SNIPDOC_JAVA_LEXER_HPP
