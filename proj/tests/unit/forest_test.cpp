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

#include "generators.hpp"
#include "snipdoc/forest.hpp"

namespace snipdoc {
namespace {

// Rows with random features, linked iff normalized distance <= 0.2.
std::vector<LabeledFeatures> synthetic_rows(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<LabeledFeatures> rows(n);
  for (LabeledFeatures& r : rows) {
    for (double& v : r.features) v = uniform_unit(rng) * 10.0;
    r.features[kLineDistance] = uniform_unit(rng);
    r.linked = r.features[kLineDistance] <= 0.2;
  }
  return rows;
}

double accuracy(const ForestModel& model, const std::vector<LabeledFeatures>& rows) {
  std::size_t ok = 0;
  for (const auto& r : rows) ok += model.predict(r.features) == r.linked ? 1 : 0;
  return static_cast<double>(ok) / static_cast<double>(rows.size());
}

TEST(Forest, LearnsDistanceRule) {
  const ForestModel model = train_forest(synthetic_rows(1000, 1), {}, 42);
  EXPECT_FALSE(model.degenerate);
  EXPECT_EQ(model.trees.size(), 100u);
  EXPECT_GE(accuracy(model, synthetic_rows(1000, 2)), 0.95);
}

TEST(Forest, DeterministicAcrossThreadCounts) {
  const auto rows = synthetic_rows(400, 3);
  ForestParams serial;
  serial.threads = 1;
  ForestParams parallel;
  parallel.threads = 6;
  const ForestModel a = train_forest(rows, serial, 9);
  EXPECT_EQ(a, train_forest(rows, serial, 9));
  EXPECT_EQ(a, train_forest(rows, parallel, 9));
  EXPECT_FALSE(a == train_forest(rows, serial, 10));
}

TEST(Forest, SingleClassIsDegenerate) {
  auto rows = synthetic_rows(50, 4);
  for (auto& r : rows) r.linked = true;
  const ForestModel yes = train_forest(rows, {}, 1);
  EXPECT_TRUE(yes.degenerate);
  EXPECT_TRUE(yes.predict(rows[0].features));
  for (auto& r : rows) r.linked = false;
  const ForestModel no = train_forest(rows, {}, 1);
  EXPECT_TRUE(no.degenerate);
  FeatureVector any{};
  EXPECT_FALSE(no.predict(any));
}

TEST(Forest, RejectsBadInput) {
  EXPECT_THROW(train_forest({}, {}, 1), Error);
  auto rows = synthetic_rows(10, 5);
  rows[3].features[0] = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(train_forest(rows, {}, 1), Error);
  ForestParams p;
  p.n_trees = 0;
  EXPECT_THROW(train_forest(synthetic_rows(10, 5), p, 1), Error);
}

DecisionTree constant_tree(bool linked) {
  DecisionTree t;
  DecisionTree::Node leaf;
  (linked ? leaf.positives : leaf.negatives) = 1;
  t.nodes = {leaf};
  return t;
}

TEST(Forest, StrictMajorityTieIsNotLinked) {
  ForestModel m;
  m.params.n_trees = 4;
  m.trees = {constant_tree(true), constant_tree(true), constant_tree(false),
             constant_tree(false)};
  const FeatureVector x{};
  EXPECT_EQ(m.votes(x), 2u);
  EXPECT_FALSE(m.predict(x));
  m.trees[2] = constant_tree(true);
  EXPECT_TRUE(m.predict(x));
}

TEST(Forest, UnanimousVoteLinksStatement) {
  std::mt19937_64 rng(8);
  const SourceMethod m = testing::random_method(rng);
  const auto cs = extract_inner_comments(m);
  ASSERT_FALSE(cs.empty());
  ForestModel all;
  all.params.n_trees = 3;
  all.trees.assign(3, constant_tree(true));
  const auto lines = linkable_lines(m);
  EXPECT_EQ(link_forest(all, m, cs[0]), LinkSet(lines.begin(), lines.end()));
  all.trees.assign(3, constant_tree(false));
  EXPECT_TRUE(link_forest(all, m, cs[0]).empty());
}

TEST(Forest, JsonRoundTrip) {
  ForestParams p;
  p.n_trees = 7;
  const ForestModel model = train_forest(synthetic_rows(200, 6), p, 77);
  const nlohmann::json j = forest_to_json(model);
  const ForestModel back = forest_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(back, model);
  const auto probe = synthetic_rows(100, 7);
  for (const auto& r : probe) EXPECT_EQ(back.votes(r.features), model.votes(r.features));
}

TEST(Forest, LoadingFailsClosed) {
  ForestParams p;
  p.n_trees = 3;
  const nlohmann::json good = forest_to_json(train_forest(synthetic_rows(60, 8), p, 1));

  auto broken = [&](auto mutate) {
    nlohmann::json j = good;
    mutate(j);
    return j;
  };
  EXPECT_THROW(forest_from_json(broken([](auto& j) { j["version"] = 2; })), SchemaError);
  EXPECT_THROW(forest_from_json(broken([](auto& j) { j["format"] = "other"; })), SchemaError);
  EXPECT_THROW(forest_from_json(broken([](auto& j) { j["feature_schema"] = "v0"; })),
               SchemaError);
  EXPECT_THROW(forest_from_json(broken([](auto& j) { j.erase("trees"); })), SchemaError);
  EXPECT_THROW(forest_from_json(broken([](auto& j) { j["params"]["n_trees"] = 4; })),
               SchemaError);
  EXPECT_THROW(forest_from_json(broken([](auto& j) { j["trees"][0][0][0] = 99; })),
               SchemaError);
  EXPECT_THROW(forest_from_json(broken([](auto& j) {
                 j["trees"][0] = nlohmann::json::array({{0, 0.5, 0, 0, 1, 1}});
               })),
               SchemaError);
  EXPECT_THROW(forest_from_json(broken([](auto& j) { j["trees"][0] = "x"; })), SchemaError);
}

}  // namespace
}  // namespace snipdoc
