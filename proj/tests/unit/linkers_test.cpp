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

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "generators.hpp"
#include "snipdoc/extractor.hpp"
#include "snipdoc/linkers.hpp"

namespace snipdoc {
namespace {

// Method whose body line 1 is the signature, so `body` starts at line 2.
SourceMethod method_of(const std::string& body) {
  const auto ms = extract_methods({"A.java", "p", "class A {\nvoid f() {\n" + body + "}\n}\n"});
  EXPECT_EQ(ms.size(), 1u);
  return ms.at(0);
}

InnerComment comment_at(const SourceMethod& m, std::size_t line) {
  for (const InnerComment& c : extract_inner_comments(m)) {
    if (c.start_line == line) return c;
  }
  ADD_FAILURE() << "no comment on line " << line;
  return {};
}

TEST(BlankLineLinker, StopsAtFirstBlank) {
  // comment 2; code 3,4; blank 5; code 6
  const SourceMethod m = method_of("// load it\na();\nb();\n\nc();\n");
  EXPECT_EQ(link_blank_line(m, comment_at(m, 2)), (LinkSet{3, 4}));
}

TEST(BlankLineLinker, CommentOnLastLine) {
  const SourceMethod m = method_of("a();\n// trailing note\n");
  // Line 4 is the closing brace alone, which is code.
  const InnerComment c = comment_at(m, 3);
  EXPECT_EQ(link_blank_line(m, c), (LinkSet{4}));
  const SourceMethod tight = extract_methods({"A.java", "p", "class A { void f() { a(); // end\n} }"})[0];
  const auto cs = extract_inner_comments(tight);
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(link_blank_line(tight, cs[0]), (LinkSet{1, 2}));
}

TEST(BlankLineLinker, CommentFollowedByBlank) {
  const SourceMethod m = method_of("// nothing here\n\na();\n");
  EXPECT_TRUE(link_blank_line(m, comment_at(m, 2)).empty());
}

TEST(BlankLineLinker, SkipsCommentOnlyLinesWithoutStopping) {
  const SourceMethod m = method_of("// first\na();\n// second\nb();\n");
  EXPECT_EQ(link_blank_line(m, comment_at(m, 2)), (LinkSet{3, 5, 6}));
}

TEST(BlankLineLinker, ContiguousOnRandomMethods) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const SourceMethod m = testing::random_method(rng);
    for (const InnerComment& c : extract_inner_comments(m)) {
      const LinkSet links = link_blank_line(m, c);
      std::size_t stop = m.line_count() + 1;
      for (std::size_t l = c.end_line + 1; l <= m.line_count(); ++l) {
        if (m.line(l).is_blank) {
          stop = l;
          break;
        }
      }
      for (std::size_t l = c.start_line; l < stop; ++l) {
        EXPECT_EQ(links.contains(l), m.line(l).linkable()) << m.source;
      }
      for (std::size_t l : links) EXPECT_LT(l, stop);
    }
  }
}

TEST(TermSimilarity, Examples) {
  EXPECT_DOUBLE_EQ(term_similarity("sort the list", "sort the list"), 1.0);
  EXPECT_DOUBLE_EQ(term_similarity("alpha beta", "gamma delta"), 0.0);
  EXPECT_DOUBLE_EQ(term_similarity("get messages from queue", "getMessages ( queue )"), 0.25);
  EXPECT_DOUBLE_EQ(term_similarity("", ""), 0.0);
  EXPECT_DOUBLE_EQ(term_similarity("A b", "a B c"), 2.0 / 3.0);
}

TEST(TermSimilarity, SymmetricAndBounded) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const std::string a = testing::random_comment(rng);
    const std::string b = testing::random_comment(rng);
    const double s = term_similarity(a, b);
    EXPECT_DOUBLE_EQ(s, term_similarity(b, a));
    EXPECT_GE(s, 0.0);
    EXPECT_LE(s, 1.0);
    EXPECT_DOUBLE_EQ(term_similarity(a, a), 1.0);
  }
}

TEST(TokenSimilarityLinker, Thresholds) {
  const SourceMethod m = method_of("// get messages from queue\ngetMessages ( queue );\nx = 1;\n");
  const InnerComment c = comment_at(m, 2);
  EXPECT_EQ(link_token_similarity(m, c, 0.0), (LinkSet{1, 3, 4, 5}));
  EXPECT_TRUE(link_token_similarity(m, c, 1.0).empty());
  // "getmessages ( queue );" has 4 terms, one shared.
  EXPECT_EQ(link_token_similarity(m, c, 0.25), (LinkSet{3}));
  EXPECT_TRUE(link_token_similarity(m, c, 0.2500001).empty());
  EXPECT_THROW(link_token_similarity(m, c, 1.5), Error);
  EXPECT_THROW(link_token_similarity(m, c, -0.1), Error);
}

TEST(TokenSimilarityLinker, MonotoneInLambda) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const SourceMethod m = testing::random_method(rng);
    for (const InnerComment& c : extract_inner_comments(m)) {
      LinkSet prev = link_token_similarity(m, c, 0.0);
      const auto all = linkable_lines(m);
      EXPECT_EQ(prev, LinkSet(all.begin(), all.end()));
      for (int k = 1; k <= 10; ++k) {
        const LinkSet cur = link_token_similarity(m, c, k / 10.0);
        for (std::size_t l : cur) EXPECT_TRUE(prev.contains(l));
        prev = cur;
      }
    }
  }
}

TEST(Features, PositionalFlags) {
  const SourceMethod m = method_of("// returns the sorted list\nsort(list);\n\nreturn list;\n");
  const InnerComment c = comment_at(m, 2);
  const FeatureVector first = extract_features(m, c, 3);
  EXPECT_EQ(first[kFirstAfterComment], 1.0);
  EXPECT_EQ(first[kBlankBetween], 0.0);
  EXPECT_EQ(first[kStatementType], static_cast<double>(StatementType::call));
  const FeatureVector later = extract_features(m, c, 5);
  EXPECT_EQ(later[kFirstAfterComment], 0.0);
  EXPECT_EQ(later[kBlankBetween], 1.0);
  EXPECT_EQ(later[kStatementType], static_cast<double>(StatementType::return_stmt));
  EXPECT_THROW(extract_features(m, c, 4), Error);  // blank
  EXPECT_THROW(extract_features(m, c, 2), Error);  // comment-only
}

TEST(Features, CommentWordClasses) {
  const SourceMethod m = method_of("// returns the sorted list\nsort(list);\n");
  const FeatureVector f = extract_features(m, comment_at(m, 2), 3);
  EXPECT_EQ(f[kCommentWords], 4.0);
  EXPECT_GE(f[kCommentNouns], 1.0);
  EXPECT_GE(f[kCommentVerbs], 1.0);
  EXPECT_EQ(f[kCommentKind], 0.0);
  // "sort" and "list" stem-match the comment's "sorted" and "list".
  EXPECT_EQ(f[kSharedIdentifiers], 2.0);
  EXPECT_EQ(f[kSameIndent], 1.0);
}

TEST(Features, RelationshipFlags) {
  const SourceMethod m = method_of("/* read\n   input */\nread(in);\n// other\nread(out);\n");
  const InnerComment c = comment_at(m, 2);
  EXPECT_EQ(c.kind, CommentKind::block);
  const FeatureVector f4 = extract_features(m, c, 4);
  const FeatureVector f6 = extract_features(m, c, 6);
  EXPECT_EQ(f4[kCommentKind], 1.0);
  EXPECT_EQ(f4[kInterveningComment], 0.0);
  EXPECT_EQ(f6[kInterveningComment], 1.0);
  EXPECT_EQ(f4[kSharesCallNext], 1.0);
  EXPECT_EQ(f6[kSharesCallPrev], 1.0);
  EXPECT_DOUBLE_EQ(f4[kLineDistance], 1.0 / static_cast<double>(m.line_count()));
}

TEST(Features, IdentifierSubwords) {
  EXPECT_EQ(identifier_subwords("getMessages"), (std::vector<std::string>{"get", "messages"}));
  EXPECT_EQ(identifier_subwords("HTTPServer_port2"),
            (std::vector<std::string>{"http", "server", "port"}));
}

TEST(Features, FiniteOnRandomMethods) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const SourceMethod m = testing::random_method(rng);
    const MethodAnalysis a(m);
    for (const InnerComment& c : extract_inner_comments(m)) {
      for (std::size_t l : a.linkable()) {
        for (double v : extract_features(a, c, l)) EXPECT_TRUE(std::isfinite(v));
      }
    }
  }
}

}  // namespace
}  // namespace snipdoc
