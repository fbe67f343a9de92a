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

#ifndef SNIPDOC_LINKERS_HPP
#define SNIPDOC_LINKERS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "snipdoc/common.hpp"
#include "snipdoc/extractor.hpp"
#include "snipdoc/java_lexer.hpp"
#include "snipdoc/porter_stemmer.hpp"
#include "snipdoc/text.hpp"

namespace snipdoc {

/// Line numbers of statements a linker may return: non-blank and not
/// comment-only.
inline std::vector<std::size_t> linkable_lines(const SourceMethod& method) {
  std::vector<std::size_t> out;
  for (const Statement& s : method.body_lines) {
    if (s.linkable()) out.push_back(s.line_no);
  }
  return out;
}

/// Blank-line heuristic: every statement after the comment up to the first
/// blank line. Code sharing a line with the comment (trailing comments, code
/// after a closing `*/`) is included.
inline LinkSet link_blank_line(const SourceMethod& method,
                               const InnerComment& comment) {
  LinkSet out;
  for (std::size_t l = comment.start_line; l <= method.line_count(); ++l) {
    const Statement& s = method.line(l);
    if (l > comment.end_line && s.is_blank) break;
    if (s.linkable()) out.insert(l);
  }
  return out;
}

/// Share of overlapping whitespace-separated terms after lowercasing:
/// |A ∩ B| / max(|A|, |B|) over term sets. Zero when either side is empty.
inline double term_similarity(std::string_view a, std::string_view b) {
  const std::vector<std::string> ta = split_whitespace(to_lower(a));
  const std::vector<std::string> tb = split_whitespace(to_lower(b));
  const std::set<std::string> sa(ta.begin(), ta.end());
  const std::set<std::string> sb(tb.begin(), tb.end());
  if (sa.empty() || sb.empty()) return 0.0;
  std::size_t shared = 0;
  for (const std::string& t : sa) shared += sb.count(t);
  return static_cast<double>(shared) /
         static_cast<double>(std::max(sa.size(), sb.size()));
}

/// Token-based similarity heuristic: links every linkable statement whose
/// code shares at least `lambda` of its terms with the comment text.
inline LinkSet link_token_similarity(const SourceMethod& method,
                                     const InnerComment& comment,
                                     double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw Error("link_token_similarity: lambda must lie in [0, 1]");
  }
  const std::string body = comment_body(comment.text);
  LinkSet out;
  for (const Statement& s : method.body_lines) {
    if (s.linkable() && term_similarity(body, s.code) >= lambda) {
      out.insert(s.line_no);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Statement features for the random-forest linker.

inline constexpr std::size_t kFeatureCount = 16;
inline constexpr std::string_view kFeatureSchema = "snipdoc.features.v1";

using FeatureVector = std::array<double, kFeatureCount>;

enum Feature : std::size_t {
  // code
  kStatementType = 0,
  kLineDistance,
  kFirstAfterComment,
  kBlankBetween,
  kRelativeIndent,
  kSharesCallPrev,
  kSharesCallNext,
  kStatementTokens,
  // comment
  kCommentWords,
  kCommentNouns,
  kCommentVerbs,
  kCommentKind,
  // relationship
  kTermSimilarity,
  kSharedIdentifiers,
  kSameIndent,
  kInterveningComment,
};

inline constexpr std::array<std::string_view, kFeatureCount> kFeatureNames = {
    "statement_type",   "line_distance",    "first_after_comment",
    "blank_between",    "relative_indent",  "shares_call_prev",
    "shares_call_next", "statement_tokens", "comment_words",
    "comment_nouns",    "comment_verbs",    "comment_kind",
    "term_similarity",  "shared_identifiers", "same_indent",
    "intervening_comment"};

enum class StatementType {
  if_else = 0,
  loop = 1,
  return_stmt = 2,
  throw_stmt = 3,
  call = 4,
  assignment = 5,
  declaration = 6,
  other = 7,
};

/// Coarse statement category from a line's code tokens.
inline StatementType classify_statement(const std::vector<std::string>& toks) {
  if (toks.empty()) return StatementType::other;
  std::size_t first = 0;
  while (first < toks.size() && (toks[first] == "}" || toks[first] == "{")) {
    ++first;
  }
  if (first == toks.size()) return StatementType::other;
  const std::string& head = toks[first];
  if (head == "if" || head == "else" || head == "switch" || head == "case") {
    return StatementType::if_else;
  }
  if (head == "for" || head == "while" || head == "do") {
    return StatementType::loop;
  }
  if (head == "return") return StatementType::return_stmt;
  if (head == "throw") return StatementType::throw_stmt;

  static const std::unordered_set<std::string_view> kAssign = {
      "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=",
      ">>>="};
  auto is_name = [](const std::string& t) {
    return !t.empty() && detail::is_ident_start(t[0]);
  };
  int depth = 0;
  for (std::size_t i = first; i < toks.size(); ++i) {
    const std::string& t = toks[i];
    if (t == "(" || t == "[") ++depth;
    if (t == ")" || t == "]") --depth;
    if (depth == 0 && kAssign.contains(t)) {
      if (t == "=" && i >= first + 2 && is_name(toks[i - 1]) &&
          !is_java_keyword(toks[i - 1]) &&
          (is_name(toks[i - 2]) || toks[i - 2] == ">" ||
           toks[i - 2] == "]") &&
          toks[i - 2] != "return") {
        return StatementType::declaration;
      }
      return StatementType::assignment;
    }
  }
  if (toks.size() >= first + 3 && toks.back() == ";" &&
      is_name(toks[toks.size() - 2]) &&
      (is_name(toks[toks.size() - 3]) || toks[toks.size() - 3] == ">" ||
       toks[toks.size() - 3] == "]") &&
      toks[toks.size() - 3] != "return") {
    return StatementType::declaration;
  }
  for (std::size_t i = first; i + 1 < toks.size(); ++i) {
    if (toks[i + 1] == "(" && is_name(toks[i]) && !is_java_keyword(toks[i])) {
      return StatementType::call;
    }
  }
  return StatementType::other;
}

namespace detail {

inline const std::unordered_set<std::string_view>& stopwords() {
  static const std::unordered_set<std::string_view> kWords = {
      "a",    "an",   "the",  "of",   "to",    "in",   "on",   "for",  "and",
      "or",   "is",   "are",  "be",   "it",    "this", "that", "with", "as",
      "by",   "at",   "from", "if",   "we",    "not",  "no",   "but",  "so",
      "its",  "was",  "can",  "will", "should", "all", "any",  "into", "then",
      "than", "when", "there", "here", "i",    "you",  "our",  "us",   "they",
      "do",   "does", "has",  "have", "been",  "may",  "must", "only", "also"};
  return kWords;
}

inline const std::unordered_set<std::string_view>& common_verbs() {
  static const std::unordered_set<std::string_view> kVerbs = {
      "get",      "set",     "add",      "remove",  "create",   "check",
      "return",   "load",    "save",     "update",  "init",     "compute",
      "calculate", "call",   "read",     "write",   "open",     "close",
      "find",     "build",   "make",     "parse",   "convert",  "handle",
      "process",  "send",    "receive",  "start",   "stop",     "run",
      "reset",    "clear",   "copy",     "move",    "sort",     "validate",
      "ensure",   "use",     "try",      "wait",    "notify",   "throw",
      "catch",    "store",   "put",      "fetch",   "register", "apply",
      "skip",     "ignore",  "append",   "insert",  "delete",   "fill",
      "wrap",     "create",  "compare",  "filter",  "map",      "merge",
      "split",    "join",    "print",    "log",     "release",  "acquire",
      "lock",     "unlock",  "flush",    "reuse",   "replace",  "render",
      "draw",     "show",    "hide",     "select",  "count",    "increment",
      "decrement", "allocate", "free",   "execute", "invoke",   "resolve",
      "collect",  "extract", "generate", "format",  "encode",   "decode",
      "keep",     "need",    "go",       "let",     "see",      "avoid",
      "do"};
  return kVerbs;
}

inline std::string strip_to_alpha(std::string_view word) {
  std::size_t b = 0;
  std::size_t e = word.size();
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  };
  while (b < e && !alpha(word[b])) ++b;
  while (e > b && !alpha(word[e - 1])) --e;
  std::string out = to_lower(word.substr(b, e - b));
  for (char c : out) {
    if (c < 'a' || c > 'z') return {};
  }
  return out;
}

}  // namespace detail

/// Verb test without a POS model: closed list of programming verbs, their
/// third-person forms, or an -ed/-ing/-ize/-ify ending.
inline bool looks_like_verb(std::string_view word) {
  const auto& verbs = detail::common_verbs();
  if (verbs.contains(word)) return true;
  if (word.size() > 2 && word.back() == 's') {
    std::string_view stem = word.substr(0, word.size() - 1);
    if (verbs.contains(stem)) return true;
    if (word.ends_with("es") && verbs.contains(word.substr(0, word.size() - 2))) {
      return true;
    }
  }
  for (std::string_view suffix : {"ed", "ing", "ize", "ify"}) {
    if (word.size() >= suffix.size() + 3 && word.ends_with(suffix)) return true;
  }
  return false;
}

struct WordCounts {
  std::size_t words = 0;
  std::size_t nouns = 0;
  std::size_t verbs = 0;
};

/// Word, noun and verb counts of a comment body. Nouns are alphabetic
/// words that are neither stopwords nor verbs.
inline WordCounts count_parts_of_speech(std::string_view body) {
  WordCounts counts;
  for (const std::string& raw : split_whitespace(body)) {
    ++counts.words;
    const std::string w = detail::strip_to_alpha(raw);
    if (w.empty() || detail::stopwords().contains(w)) continue;
    if (looks_like_verb(w)) {
      ++counts.verbs;
    } else {
      ++counts.nouns;
    }
  }
  return counts;
}

/// Splits an identifier on camelCase humps, digits and underscores.
inline std::vector<std::string> identifier_subwords(std::string_view ident) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(to_lower(cur));
    cur.clear();
  };
  for (std::size_t i = 0; i < ident.size(); ++i) {
    const char c = ident[i];
    const bool upper = c >= 'A' && c <= 'Z';
    const bool lower = c >= 'a' && c <= 'z';
    if (!upper && !lower) {
      flush();
      continue;
    }
    if (upper && !cur.empty()) {
      const bool prev_lower = cur.back() >= 'a' && cur.back() <= 'z';
      const bool next_lower = i + 1 < ident.size() && ident[i + 1] >= 'a' &&
                              ident[i + 1] <= 'z';
      if (prev_lower || next_lower) flush();
    }
    cur.push_back(c);
  }
  flush();
  return out;
}

/// Per-method facts shared by every feature computation on that method.
class MethodAnalysis {
 public:
  explicit MethodAnalysis(const SourceMethod& method) : method_(&method) {
    const std::size_t n = method.line_count();
    line_tokens_.resize(n + 1);
    calls_.resize(n + 1);
    for (const Token& t : lex_java(method.source)) {
      if (!t.is_comment()) line_tokens_[t.line].push_back(t.text);
    }
    for (std::size_t l = 1; l <= n; ++l) {
      const auto& toks = line_tokens_[l];
      for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
        if (toks[i + 1] == "(" && !toks[i].empty() &&
            detail::is_ident_start(toks[i][0]) && !is_java_keyword(toks[i])) {
          calls_[l].insert(toks[i]);
        }
      }
    }
    linkable_ = linkable_lines(method);
  }

  const SourceMethod& method() const { return *method_; }
  const std::vector<std::string>& tokens(std::size_t line) const {
    return line_tokens_.at(line);
  }
  const std::set<std::string>& calls(std::size_t line) const {
    return calls_.at(line);
  }
  const std::vector<std::size_t>& linkable() const { return linkable_; }

  std::size_t indent(std::size_t line) const {
    return indentation(method_->line(line).text);
  }

 private:
  const SourceMethod* method_;
  std::vector<std::vector<std::string>> line_tokens_;
  std::vector<std::set<std::string>> calls_;
  std::vector<std::size_t> linkable_;
};

namespace detail {

inline bool intersects(const std::set<std::string>& a,
                       const std::set<std::string>& b) {
  for (const std::string& x : a) {
    if (b.contains(x)) return true;
  }
  return false;
}

}  // namespace detail

/// 16-dimensional feature vector of (comment, statement) on an analyzed
/// method. Index layout follows the `Feature` enum.
inline FeatureVector extract_features(const MethodAnalysis& analysis,
                                      const InnerComment& comment,
                                      std::size_t statement_line) {
  const SourceMethod& m = analysis.method();
  const Statement& stmt = m.line(statement_line);
  if (!stmt.linkable()) {
    throw Error("extract_features: line " + std::to_string(statement_line) +
                " is not a linkable statement");
  }
  FeatureVector f{};
  const auto n = static_cast<double>(m.line_count());
  const std::vector<std::size_t>& linkable = analysis.linkable();
  const auto pos = std::lower_bound(linkable.begin(), linkable.end(),
                                    statement_line);

  f[kStatementType] =
      static_cast<double>(classify_statement(analysis.tokens(statement_line)));
  f[kLineDistance] = (static_cast<double>(statement_line) -
                      static_cast<double>(comment.end_line)) /
                     n;

  const auto first_after =
      std::lower_bound(linkable.begin(), linkable.end(), comment.start_line);
  f[kFirstAfterComment] =
      (first_after != linkable.end() && *first_after == statement_line) ? 1.0
                                                                         : 0.0;

  const std::size_t lo = std::min(statement_line, comment.start_line);
  const std::size_t hi = std::max(statement_line, comment.end_line);
  bool blank_between = false;
  bool other_comment_between = false;
  for (std::size_t l = lo + 1; l < hi; ++l) {
    if (l >= comment.start_line && l <= comment.end_line) continue;
    const Statement& s = m.line(l);
    blank_between = blank_between || s.is_blank;
    other_comment_between = other_comment_between || s.is_comment_only;
  }
  f[kBlankBetween] = blank_between ? 1.0 : 0.0;

  const auto stmt_indent = static_cast<double>(analysis.indent(statement_line));
  const auto comment_indent =
      static_cast<double>(analysis.indent(comment.start_line));
  f[kRelativeIndent] = (stmt_indent - comment_indent) / 4.0;

  const std::set<std::string>& calls = analysis.calls(statement_line);
  if (pos != linkable.begin()) {
    f[kSharesCallPrev] =
        detail::intersects(calls, analysis.calls(*(pos - 1))) ? 1.0 : 0.0;
  }
  if (pos != linkable.end() && pos + 1 != linkable.end()) {
    f[kSharesCallNext] =
        detail::intersects(calls, analysis.calls(*(pos + 1))) ? 1.0 : 0.0;
  }
  f[kStatementTokens] =
      static_cast<double>(analysis.tokens(statement_line).size());

  const std::string body = comment_body(comment.text);
  const WordCounts words = count_parts_of_speech(body);
  f[kCommentWords] = static_cast<double>(words.words);
  f[kCommentNouns] = static_cast<double>(words.nouns);
  f[kCommentVerbs] = static_cast<double>(words.verbs);
  f[kCommentKind] = comment.kind == CommentKind::block ? 1.0 : 0.0;

  f[kTermSimilarity] = term_similarity(body, stmt.code);

  std::set<std::string> comment_stems;
  for (const std::string& raw : split_whitespace(body)) {
    const std::string w = detail::strip_to_alpha(raw);
    if (!w.empty()) comment_stems.insert(porter_stem(w));
  }
  std::set<std::string> stmt_stems;
  for (const std::string& tok : analysis.tokens(statement_line)) {
    if (tok.empty() || !detail::is_ident_start(tok[0])) continue;
    for (const std::string& sub : identifier_subwords(tok)) {
      stmt_stems.insert(porter_stem(sub));
    }
  }
  std::size_t shared = 0;
  for (const std::string& s : stmt_stems) shared += comment_stems.count(s);
  f[kSharedIdentifiers] = static_cast<double>(shared);
  f[kSameIndent] = stmt_indent == comment_indent ? 1.0 : 0.0;
  f[kInterveningComment] = other_comment_between ? 1.0 : 0.0;
  return f;
}

inline FeatureVector extract_features(const SourceMethod& method,
                                      const InnerComment& comment,
                                      std::size_t statement_line) {
  return extract_features(MethodAnalysis(method), comment, statement_line);
}

}  // namespace snipdoc

#endif  // SNIPDOC_LINKERS_HPP
