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

#ifndef SNIPDOC_EXTRACTOR_HPP
#define SNIPDOC_EXTRACTOR_HPP

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_set>
#include <vector>

#include "snipdoc/common.hpp"
#include "snipdoc/java_lexer.hpp"
#include "snipdoc/text.hpp"

namespace snipdoc {

struct SourceFile {
  std::string path;
  std::string project_id;
  std::string content;
};

/// One physical line of a method. Line numbers are 1-based within the
/// method's source span, which starts at the line of its first header token
/// (annotations included) and ends at the closing brace.
struct Statement {
  std::size_t line_no = 0;
  std::string text;
  std::string code;  // text with comment spans removed, trimmed
  bool is_blank = false;
  bool is_comment_only = false;

  bool linkable() const { return !is_blank && !is_comment_only; }
  bool operator==(const Statement&) const = default;
};

enum class CommentKind { line, block };

inline std::string_view to_string(CommentKind kind) {
  return kind == CommentKind::line ? "line" : "block";
}

struct InnerComment {
  std::string id;
  CommentKind kind = CommentKind::line;
  std::string text;  // raw, markers included
  std::size_t start_line = 0;
  std::size_t end_line = 0;
  bool trailing = false;
  std::size_t begin = 0;  // byte range within SourceMethod::source
  std::size_t end = 0;

  bool operator==(const InnerComment&) const = default;
};

struct SourceMethod {
  std::string id;
  std::string project;
  std::string path;
  std::string name;
  std::size_t file_line = 0;  // file line of body line 1
  std::string source;
  std::size_t body_offset = 0;  // offset of the body's '{' within source
  std::vector<Statement> body_lines;
  std::vector<std::string> tokens;  // code tokens, comments excluded
  bool is_test = false;

  std::size_t token_count() const { return tokens.size(); }
  std::size_t line_count() const { return body_lines.size(); }
  const Statement& line(std::size_t line_no) const {
    return body_lines.at(line_no - 1);
  }
};

struct MethodHeader {
  std::string project;
  std::string path;
  std::string name;
  std::size_t file_line = 1;
  bool is_test = false;
};

/// Builds a method from its source span. Identity, statements and tokens
/// are pure functions of `source`, so a method reloaded from a manifest is
/// identical to the extracted one.
inline SourceMethod analyze_method(MethodHeader header, std::string source,
                                   std::size_t body_offset) {
  SourceMethod m;
  m.project = std::move(header.project);
  m.path = std::move(header.path);
  m.name = std::move(header.name);
  m.file_line = header.file_line;
  m.is_test = header.is_test;
  m.source = std::move(source);
  m.body_offset = body_offset;

  const std::vector<Token> tokens = lex_java(m.source);
  const std::vector<std::string> lines = split_lines(m.source);
  std::vector<std::size_t> line_starts;
  line_starts.reserve(lines.size());
  std::size_t at = 0;
  for (const std::string& l : lines) {
    line_starts.push_back(at);
    at += l.size() + 1;
  }

  std::vector<bool> has_code(lines.size(), false);
  std::vector<bool> has_comment(lines.size(), false);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> comment_spans(
      lines.size());
  std::string normalized;
  for (const Token& t : tokens) {
    for (std::size_t l = t.line; l <= t.end_line; ++l) {
      (t.is_comment() ? has_comment : has_code)[l - 1] = true;
    }
    if (t.is_comment()) {
      for (std::size_t l = t.line; l <= t.end_line; ++l) {
        const std::size_t ls = line_starts[l - 1];
        const std::size_t le = ls + lines[l - 1].size();
        const std::size_t b = std::max(ls, t.offset);
        const std::size_t e = std::min(le, t.end_offset());
        if (e > b) comment_spans[l - 1].emplace_back(b - ls, e - ls);
      }
      normalized += join(split_whitespace(t.text), " ");
    } else {
      m.tokens.push_back(t.text);
      normalized += t.text;
    }
    normalized.push_back('\x1f');
  }
  m.id = to_hex(fnv1a64(normalized));

  m.body_lines.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    Statement s;
    s.line_no = i + 1;
    s.text = lines[i];
    std::string code;
    std::size_t cursor = 0;
    for (const auto& [b, e] : comment_spans[i]) {
      code.append(s.text, cursor, b - cursor);
      code.push_back(' ');
      cursor = e;
    }
    code.append(s.text, cursor);
    s.code = std::string(trim(code));
    s.is_blank = !has_code[i] && !has_comment[i];
    s.is_comment_only = has_comment[i] && !has_code[i];
    m.body_lines.push_back(std::move(s));
  }
  return m;
}

namespace detail {

struct Scope {
  enum Kind { type, method, other } kind;
  std::size_t open_index;  // index into the code-token list
  bool enum_constants = false;
  std::size_t method_start = 0;
  std::size_t method_name = 0;
};

inline bool is_ident(const Token& t) {
  return t.kind == TokenKind::identifier && !is_java_keyword(t.text);
}

// Index of the '(' matching the ')' at `close`, or npos.
inline std::size_t match_open_paren(const std::vector<const Token*>& code,
                                    std::size_t close) {
  int depth = 0;
  for (std::size_t i = close + 1; i-- > 0;) {
    if (code[i]->text == ")") ++depth;
    if (code[i]->text == "(") {
      if (--depth == 0) return i;
    }
  }
  return std::string_view::npos;
}

// First token of the member declaration ending before `index`.
inline std::size_t declaration_start(const std::vector<const Token*>& code,
                                     std::size_t index) {
  int parens = 0;
  std::size_t i = index;
  while (i > 0) {
    const std::string& t = code[i - 1]->text;
    if (t == ")") ++parens;
    if (t == "(") --parens;
    if (parens <= 0 && (t == ";" || t == "{" || t == "}")) break;
    --i;
  }
  return i;
}

// If the '{' at `brace` opens a method or constructor body, returns the
// index of the method name.
inline std::optional<std::size_t> method_name_before(
    const std::vector<const Token*>& code, std::size_t brace) {
  if (brace == 0) return std::nullopt;
  std::size_t close = brace - 1;
  if (code[close]->text != ")") {
    // Skip a throws clause: `) throws A, b.C<D> {`.
    std::size_t i = brace;
    bool found_throws = false;
    for (int budget = 64; i > 0 && budget > 0; --budget) {
      const Token& t = *code[i - 1];
      if (t.text == "throws") {
        found_throws = true;
        --i;
        break;
      }
      if (!(is_ident(t) || t.text == "." || t.text == "," || t.text == "<" ||
            t.text == ">" || t.text == ">>" || t.text == "?" ||
            t.text == "@")) {
        return std::nullopt;
      }
      --i;
    }
    if (!found_throws || i == 0 || code[i - 1]->text != ")") {
      return std::nullopt;
    }
    close = i - 1;
  }
  const std::size_t open = match_open_paren(code, close);
  if (open == std::string_view::npos || open == 0) return std::nullopt;
  const std::size_t name = open - 1;
  if (!is_ident(*code[name])) return std::nullopt;
  if (name > 0) {
    const std::string& before = code[name - 1]->text;
    if (before == "new" || before == "." || before == "," || before == "(" ||
        before == "=" || before == "->" || before == "?" || before == ":" ||
        before == "return" || before == "record") {
      return std::nullopt;
    }
  }
  return name;
}

inline bool has_test_annotation(const std::vector<const Token*>& code,
                                std::size_t from, std::size_t to) {
  for (std::size_t i = from; i < to; ++i) {
    if (code[i]->text != "@") continue;
    std::size_t j = i + 1;
    std::string last;
    while (j < to && is_ident(*code[j])) {
      last = code[j]->text;
      if (j + 1 < to && code[j + 1]->text == ".") {
        j += 2;
      } else {
        break;
      }
    }
    if (last == "Test") return true;
  }
  return false;
}

inline std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  return 1 + static_cast<std::size_t>(
                 std::count(text.begin(), text.begin() + offset, '\n'));
}

}  // namespace detail

/// Segments a Java file into methods by brace matching over the lexer.
/// Constructors are methods; anonymous or local class bodies stay inside
/// their enclosing method. Line endings are normalized to '\n' before
/// offsets are computed.
inline std::vector<SourceMethod> extract_methods(const SourceFile& file) {
  std::string content = file.content;
  content.erase(std::remove(content.begin(), content.end(), '\r'),
                content.end());
  const std::vector<Token> tokens = lex_java(content);
  std::vector<const Token*> code;
  for (const Token& t : tokens) {
    if (!t.is_comment()) code.push_back(&t);
  }

  std::vector<SourceMethod> methods;
  std::vector<detail::Scope> stack;
  std::size_t method_depth = 0;
  for (std::size_t i = 0; i < code.size(); ++i) {
    const Token& t = *code[i];
    if (t.text == "{") {
      detail::Scope scope{detail::Scope::other, i};
      if (method_depth == 0) {
        const bool enum_constants =
            !stack.empty() && stack.back().enum_constants;
        std::optional<std::size_t> name;
        if (!enum_constants) name = detail::method_name_before(code, i);
        const std::size_t decl = detail::declaration_start(code, i);
        if (name) {
          scope.kind = detail::Scope::method;
          scope.method_name = *name;
          scope.method_start = decl;
          ++method_depth;
        } else {
          for (std::size_t k = decl; k < i; ++k) {
            const std::string& w = code[k]->text;
            if (w == "class" || w == "interface" || w == "enum" ||
                w == "record") {
              scope.kind = detail::Scope::type;
              scope.enum_constants = (w == "enum");
            }
          }
        }
      }
      stack.push_back(scope);
    } else if (t.text == "}") {
      if (stack.empty()) {
        throw ExtractionError("unbalanced '}' in " + file.path, t.offset,
                              t.line);
      }
      const detail::Scope scope = stack.back();
      stack.pop_back();
      if (scope.kind == detail::Scope::method) {
        --method_depth;
        const Token& first = *code[scope.method_start];
        std::size_t begin = first.offset;
        const std::size_t line_begin =
            content.rfind('\n', begin == 0 ? 0 : begin - 1);
        const std::size_t ls =
            (line_begin == std::string::npos || begin == 0) ? 0
                                                            : line_begin + 1;
        if (trim(std::string_view(content).substr(ls, begin - ls)).empty()) {
          begin = ls;
        }
        MethodHeader header;
        header.project = file.project_id;
        header.path = file.path;
        header.name = code[scope.method_name]->text;
        header.file_line = detail::line_of_offset(content, begin);
        header.is_test = detail::has_test_annotation(code, scope.method_start,
                                                     scope.method_name);
        const Token& open = *code[scope.open_index];
        methods.push_back(analyze_method(
            std::move(header), content.substr(begin, t.end_offset() - begin),
            open.offset - begin));
      }
    } else if (t.text == ";" && !stack.empty() && stack.back().enum_constants &&
               method_depth == 0) {
      stack.back().enum_constants = false;
    }
  }
  if (!stack.empty()) {
    const Token& open = *code[stack.back().open_index];
    throw ExtractionError("unclosed '{' in " + file.path, open.offset,
                          open.line);
  }
  return methods;
}

/// Inner comments of a method body: `//` and `/* */` comments after the
/// body's opening brace. Javadoc and comment-like text inside literals are
/// never returned.
inline std::vector<InnerComment> extract_inner_comments(
    const SourceMethod& method) {
  std::vector<InnerComment> out;
  const std::vector<Token> tokens = lex_java(method.source);
  std::size_t last_code_line = 0;
  for (const Token& t : tokens) {
    if (!t.is_comment()) {
      last_code_line = t.end_line;
      continue;
    }
    if (t.offset < method.body_offset || t.kind == TokenKind::javadoc) {
      continue;
    }
    InnerComment c;
    c.id = method.id + ":" + std::to_string(out.size());
    c.kind = t.kind == TokenKind::line_comment ? CommentKind::line
                                               : CommentKind::block;
    c.text = t.text;
    c.start_line = t.line;
    c.end_line = t.end_line;
    c.trailing = last_code_line == t.line;
    c.begin = t.offset;
    c.end = t.end_offset();
    out.push_back(std::move(c));
  }
  return out;
}

/// True iff the method's code token count is within `max_tokens`.
inline bool filter_method(const SourceMethod& method, std::size_t max_tokens) {
  if (max_tokens == 0) throw Error("filter_method: max_tokens must be > 0");
  return method.token_count() <= max_tokens;
}

/// Keeps the first method for each identity hash.
inline std::vector<SourceMethod> dedup_methods(
    std::vector<SourceMethod> methods) {
  std::unordered_set<std::string> seen;
  std::vector<SourceMethod> out;
  out.reserve(methods.size());
  for (SourceMethod& m : methods) {
    if (seen.insert(m.id).second) out.push_back(std::move(m));
  }
  return out;
}

struct MineConfig {
  std::size_t max_tokens = 1024;
  bool skip_tests = true;
  unsigned threads = 0;  // 0 = hardware concurrency
};

namespace skip_reason {
inline constexpr std::string_view kOverTokenCap = "over_token_cap";
inline constexpr std::string_view kDuplicate = "duplicate";
inline constexpr std::string_view kTestMethod = "test_method";
inline constexpr std::string_view kUnreadable = "unreadable_file";
inline constexpr std::string_view kUndecodable = "undecodable_file";
inline constexpr std::string_view kExtractionError = "extraction_error";
}  // namespace skip_reason

struct CorpusManifest {
  std::vector<SourceMethod> methods;
  std::map<std::string, std::size_t> skipped;
  std::size_t files = 0;
  std::vector<std::string> warnings;
};

/// Collects every `.java` file under `root`, sorted by relative path. The
/// project id is the first path component.
inline std::vector<std::filesystem::path> list_java_files(
    const std::filesystem::path& root) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(root)) {
    throw Error("corpus root does not exist: " + root.string());
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (entry.is_regular_file() && entry.path().extension() == ".java") {
      files.push_back(fs::relative(entry.path(), root));
    }
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.generic_string() < b.generic_string();
  });
  return files;
}

/// Mines every Java file under `root` into a manifest of retained methods.
/// Files are processed in parallel; the merge is ordered by path so output
/// is independent of scheduling.
inline CorpusManifest mine_corpus(const std::filesystem::path& root,
                                  const MineConfig& config = {}) {
  namespace fs = std::filesystem;
  const std::vector<fs::path> files = list_java_files(root);

  struct FileResult {
    std::vector<SourceMethod> methods;
    std::optional<std::string> skip;
    std::string warning;
  };
  std::vector<FileResult> results(files.size());
  auto process = [&](std::size_t idx) {
    FileResult& r = results[idx];
    const fs::path& rel = files[idx];
    std::ifstream in(root / rel, std::ios::binary);
    std::string content;
    if (in) {
      content.assign(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
    }
    if (!in && !in.eof()) {
      r.skip = std::string(skip_reason::kUnreadable);
      r.warning = "cannot read " + rel.generic_string();
      return;
    }
    SourceFile file;
    file.path = rel.generic_string();
    auto it = rel.begin();
    file.project_id = std::distance(rel.begin(), rel.end()) > 1
                          ? it->generic_string()
                          : std::string();
    file.content = std::move(content);
    if (!is_valid_utf8(file.content)) {
      r.skip = std::string(skip_reason::kUndecodable);
      r.warning = "not UTF-8: " + file.path;
      return;
    }
    try {
      r.methods = extract_methods(file);
    } catch (const ExtractionError& e) {
      r.skip = std::string(skip_reason::kExtractionError);
      r.warning = e.what();
    }
  };

  unsigned threads = config.threads ? config.threads
                                    : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(files.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < files.size(); ++i) process(i);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < files.size(); i += threads) process(i);
      });
    }
  }

  CorpusManifest manifest;
  manifest.files = files.size();
  std::unordered_set<std::string> seen;
  for (FileResult& r : results) {
    if (r.skip) {
      ++manifest.skipped[*r.skip];
      manifest.warnings.push_back(std::move(r.warning));
      continue;
    }
    for (SourceMethod& m : r.methods) {
      if (config.skip_tests && m.is_test) {
        ++manifest.skipped[std::string(skip_reason::kTestMethod)];
      } else if (!filter_method(m, config.max_tokens)) {
        ++manifest.skipped[std::string(skip_reason::kOverTokenCap)];
      } else if (!seen.insert(m.id).second) {
        ++manifest.skipped[std::string(skip_reason::kDuplicate)];
      } else {
        manifest.methods.push_back(std::move(m));
      }
    }
  }
  return manifest;
}

}  // namespace snipdoc

#endif  // SNIPDOC_EXTRACTOR_HPP
