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

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "generators.hpp"
#include "snipdoc/extractor.hpp"

namespace snipdoc {
namespace {

namespace fs = std::filesystem;

SourceFile file_of(std::string content, std::string path = "p/A.java") {
  return {std::move(path), "p", std::move(content)};
}

SourceMethod only_method(const std::string& body) {
  const auto ms = extract_methods(file_of("class A {\n  void f() {\n" + body + "\n  }\n}\n"));
  EXPECT_EQ(ms.size(), 1u);
  return ms.at(0);
}

TEST(ExtractMethods, PlainAndTestMethods) {
  const auto ms = extract_methods(file_of("class A { void foo(){int x=0;} @Test void t(){} }"));
  ASSERT_EQ(ms.size(), 2u);
  EXPECT_EQ(ms[0].name, "foo");
  EXPECT_FALSE(ms[0].is_test);
  EXPECT_EQ(ms[1].name, "t");
  EXPECT_TRUE(ms[1].is_test);
  EXPECT_TRUE(extract_methods(file_of("class B { @org.junit.Test void q() {} }"))[0].is_test);
  EXPECT_FALSE(extract_methods(file_of("class B { @Override void q() {} }"))[0].is_test);
}

TEST(ExtractMethods, EmptyFileHasNoMethods) {
  EXPECT_TRUE(extract_methods(file_of("")).empty());
  EXPECT_TRUE(extract_methods(file_of("interface I { void f(); }")).empty());
}

TEST(ExtractMethods, ConstructorsAndNestedBodies) {
  const std::string src =
      "class A {\n"
      "  A(int x) { this.x = x; }\n"
      "  void run() throws IOException {\n"
      "    Runnable r = new Runnable() {\n"
      "      public void run() { go(); }\n"
      "    };\n"
      "    list.forEach(x -> { use(x); });\n"
      "  }\n"
      "  static { init(); }\n"
      "  class Inner { int g() { return 1; } }\n"
      "}\n";
  const auto ms = extract_methods(file_of(src));
  ASSERT_EQ(ms.size(), 3u);
  EXPECT_EQ(ms[0].name, "A");
  EXPECT_EQ(ms[1].name, "run");
  EXPECT_EQ(ms[1].line_count(), 6u);  // anonymous class stays inside
  EXPECT_EQ(ms[1].file_line, 3u);
  EXPECT_EQ(ms[2].name, "g");
}

TEST(ExtractMethods, ControlStructuresAndRecordsAreNotMethods) {
  const auto ms = extract_methods(file_of(
      "record Point(int x, int y) { Point { check(x); } int sum() { return x + y; } }\n"
      "enum E { A { void f() {} }, B; void g() { if (x) { y(); } } }\n"));
  std::vector<std::string> names;
  for (const auto& m : ms) names.push_back(m.name);
  EXPECT_EQ(names, (std::vector<std::string>{"sum", "f", "g"}));
}

TEST(ExtractMethods, UnbalancedBracesCarryOffset) {
  try {
    extract_methods(file_of("class A { void f() { } } }"));
    FAIL();
  } catch (const ExtractionError& e) {
    EXPECT_EQ(e.offset(), 25u);
  }
  EXPECT_THROW(extract_methods(file_of("class A { void f() { ")), ExtractionError);
}

TEST(ExtractMethods, BodyLinesNumberedFromSignature) {
  const SourceMethod m = only_method("    int x = 0;\n\n    // note\n    x++; // bump");
  ASSERT_EQ(m.line_count(), 6u);
  for (std::size_t i = 0; i < m.line_count(); ++i) EXPECT_EQ(m.body_lines[i].line_no, i + 1);
  EXPECT_TRUE(m.line(3).is_blank);
  EXPECT_TRUE(m.line(4).is_comment_only);
  EXPECT_FALSE(m.line(4).is_blank);
  EXPECT_TRUE(m.line(5).linkable());
  EXPECT_EQ(m.line(5).code, "x++;");
}

TEST(ExtractInnerComments, TrailingLineComment) {
  const SourceMethod m = only_method("    load(); // init cache");
  const auto cs = extract_inner_comments(m);
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].kind, CommentKind::line);
  EXPECT_TRUE(cs[0].trailing);
  EXPECT_EQ(cs[0].text, "// init cache");
  EXPECT_EQ(cs[0].start_line, 2u);
}

TEST(ExtractInnerComments, JavadocAndStringsExcluded) {
  EXPECT_TRUE(extract_inner_comments(only_method("    /** doc */")).empty());
  EXPECT_TRUE(
      extract_inner_comments(only_method("    String s = \"// not a comment\";")).empty());
  EXPECT_TRUE(extract_inner_comments(only_method("    char c = '/'; int d = 1 / 2;")).empty());
}

TEST(ExtractInnerComments, BlockCommentSpan) {
  const SourceMethod m = only_method("    /* one\n       two */\n    go();");
  const auto cs = extract_inner_comments(m);
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].kind, CommentKind::block);
  EXPECT_FALSE(cs[0].trailing);
  EXPECT_EQ(cs[0].start_line, 2u);
  EXPECT_EQ(cs[0].end_line, 3u);
  EXPECT_EQ(m.source.substr(cs[0].begin, cs[0].end - cs[0].begin), cs[0].text);
}

TEST(ExtractInnerComments, CommentsBeforeBodyAreNotInner) {
  const auto ms = extract_methods(file_of("class A {\n  void f(/* p */ int a) {\n    go();\n  }\n}"));
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_TRUE(extract_inner_comments(ms[0]).empty());
}

TEST(FilterMethod, InclusiveCap) {
  std::string body;
  // "x();" is 4 tokens; signature "void f() {" 5 and closing brace 1.
  for (int i = 0; i < 254; ++i) body += "x();";
  const SourceMethod m = only_method(body);
  ASSERT_EQ(m.token_count(), 1022u);
  EXPECT_TRUE(filter_method(m, 1022));
  EXPECT_FALSE(filter_method(m, 1021));
  EXPECT_THROW(filter_method(m, 0), Error);
}

TEST(FilterMethod, OverCapMethodStillExtracted) {
  std::string body;
  for (int i = 0; i < 500; ++i) body += "x();";
  const SourceMethod m = only_method(body);
  EXPECT_EQ(m.token_count(), 2006u);
  EXPECT_FALSE(filter_method(m, 1024));
  EXPECT_TRUE(filter_method(m, 4096));
}

TEST(DedupMethods, TokenStreamIdentity) {
  const auto a = extract_methods(file_of("class A { int f() { return 1; } int g() { return 2; } }"));
  const auto b = extract_methods(file_of("class B {\n  int f()   {\n return 1;\n }\n}", "p/B.java"));
  ASSERT_EQ(a.size(), 2u);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(a[0].id, b[0].id);  // whitespace differs, tokens do not
  const auto d = dedup_methods({a[0], b[0], a[1]});
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].path, "p/A.java");
  EXPECT_EQ(d[1].name, "g");
  EXPECT_EQ(dedup_methods(d).size(), d.size());
  EXPECT_TRUE(dedup_methods({}).empty());
}

TEST(ExtractorProperties, RandomMethods) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const std::string src = "class G {\n" + testing::random_method_source(rng) + "}\n";
    const auto ms = extract_methods(file_of(src));
    ASSERT_EQ(ms.size(), 1u);
    const SourceMethod& m = ms[0];
    for (std::size_t l = 0; l < m.line_count(); ++l) {
      EXPECT_EQ(m.body_lines[l].line_no, l + 1);
      EXPECT_FALSE(m.body_lines[l].is_blank && m.body_lines[l].is_comment_only);
    }
    const auto cs = extract_inner_comments(m);
    EXPECT_EQ(cs, extract_inner_comments(m));
    for (const InnerComment& c : cs) {
      EXPECT_GE(c.start_line, 1u);
      EXPECT_LE(c.start_line, c.end_line);
      EXPECT_LE(c.end_line, m.line_count());
      EXPECT_FALSE(c.text.starts_with("/**"));
      EXPECT_EQ(c.kind == CommentKind::line, c.text.starts_with("//"));
    }
    // Reanalysis from the stored span is identical.
    const SourceMethod again =
        analyze_method({m.project, m.path, m.name, m.file_line, m.is_test}, m.source,
                       m.body_offset);
    EXPECT_EQ(again.id, m.id);
    EXPECT_EQ(again.tokens, m.tokens);
  }
}

class MineCorpusTest : public ::testing::Test {
 protected:
  void SetUp() override {
    root_ = fs::temp_directory_path() /
            ("snipdoc_mine_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(root_);
    fs::create_directories(root_);
  }
  void TearDown() override { fs::remove_all(root_); }
  void write(const std::string& rel, const std::string& content) {
    fs::create_directories((root_ / rel).parent_path());
    std::ofstream(root_ / rel, std::ios::binary) << content;
  }
  fs::path root_;
};

TEST_F(MineCorpusTest, DuplicatesAcrossFiles) {
  const std::string cls = "class A { int f() { return 1; } }";
  write("p1/A.java", cls);
  write("p2/B.java", cls);
  const CorpusManifest m = mine_corpus(root_);
  ASSERT_EQ(m.methods.size(), 1u);
  EXPECT_EQ(m.methods[0].project, "p1");
  EXPECT_EQ(m.methods[0].path, "p1/A.java");
  EXPECT_EQ(m.skipped.at("duplicate"), 1u);
  EXPECT_EQ(m.files, 2u);
}

TEST_F(MineCorpusTest, EmptyDirectory) {
  const CorpusManifest m = mine_corpus(root_);
  EXPECT_TRUE(m.methods.empty());
  EXPECT_TRUE(m.skipped.empty());
  EXPECT_EQ(m.files, 0u);
}

TEST_F(MineCorpusTest, SkipReasons) {
  std::string big = "class Big { void f() {";
  for (int i = 0; i < 300; ++i) big += "x();";
  big += "} }";
  write("p/Big.java", big);
  write("p/T.java", "class T { @Test void t() { go(); } void u() { stay(); } }");
  write("p/Bad.java", "class Bad { void f() { } } }");
  write("p/Latin.java", "class L { void f() { int \xff; } }");
  write("p/notes.txt", "ignored");
  MineConfig config;
  config.threads = 3;
  const CorpusManifest m = mine_corpus(root_, config);
  EXPECT_EQ(m.skipped.at("over_token_cap"), 1u);
  EXPECT_EQ(m.skipped.at("test_method"), 1u);
  EXPECT_EQ(m.skipped.at("extraction_error"), 1u);
  EXPECT_EQ(m.skipped.at("undecodable_file"), 1u);
  ASSERT_EQ(m.methods.size(), 1u);
  EXPECT_EQ(m.methods[0].name, "u");
  EXPECT_EQ(m.files, 4u);
}

TEST_F(MineCorpusTest, ParallelAndSerialAgree) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    write("p" + std::to_string(i % 3) + "/F" + std::to_string(i) + ".java",
          "class F {\n" + testing::random_method_source(rng) +
              testing::random_method_source(rng) + "}\n");
  }
  MineConfig serial;
  serial.threads = 1;
  MineConfig parallel;
  parallel.threads = 8;
  const auto a = mine_corpus(root_, serial);
  const auto b = mine_corpus(root_, parallel);
  ASSERT_EQ(a.methods.size(), b.methods.size());
  for (std::size_t i = 0; i < a.methods.size(); ++i) {
    EXPECT_EQ(a.methods[i].id, b.methods[i].id);
    EXPECT_EQ(a.methods[i].path, b.methods[i].path);
  }
  EXPECT_EQ(a.skipped, b.skipped);
}

TEST(MineCorpus, MissingRootIsFatal) {
  EXPECT_THROW(mine_corpus("/nonexistent/snipdoc/root"), Error);
}

}  // namespace
}  // namespace snipdoc
