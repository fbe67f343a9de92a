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

#ifndef SNIPDOC_FOREST_HPP
#define SNIPDOC_FOREST_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "json.hpp"
#include "snipdoc/common.hpp"
#include "snipdoc/linkers.hpp"

namespace snipdoc {

struct ForestParams {
  std::size_t n_trees = 100;
  std::size_t max_depth = 12;
  std::size_t min_split = 2;
  std::size_t features_per_split = 4;  // ceil(sqrt(16))
  unsigned threads = 0;                // 0 = hardware concurrency

  void validate() const {
    if (n_trees < 1) throw Error("forest: n_trees must be >= 1");
    if (min_split < 2) throw Error("forest: min_split must be >= 2");
    if (features_per_split < 1 || features_per_split > kFeatureCount) {
      throw Error("forest: features_per_split out of range");
    }
  }
};

struct LinkerConfig {
  double lambda = 0.3;
  ForestParams forest;
  std::uint64_t seed = 42;
};

struct LabeledFeatures {
  FeatureVector features;
  bool linked = false;
};

/// Axis-aligned binary tree. Internal nodes send `x[feature] <= threshold`
/// left; leaves keep the class counts of the bootstrap sample that reached
/// them.
struct DecisionTree {
  struct Node {
    int feature = -1;  // -1 marks a leaf
    double threshold = 0.0;
    std::uint32_t left = 0;
    std::uint32_t right = 0;
    std::uint32_t negatives = 0;
    std::uint32_t positives = 0;

    bool operator==(const Node&) const = default;
  };

  std::vector<Node> nodes;

  bool predict(const FeatureVector& x) const {
    std::uint32_t i = 0;
    while (nodes[i].feature >= 0) {
      const Node& n = nodes[i];
      i = x[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left
                                                                : n.right;
    }
    return nodes[i].positives > nodes[i].negatives;
  }

  bool operator==(const DecisionTree&) const = default;
};

struct ForestModel {
  std::vector<DecisionTree> trees;
  ForestParams params;
  std::uint64_t seed = 0;
  std::size_t training_size = 0;
  bool degenerate = false;  // trained on a single class

  /// Number of trees voting "linked".
  std::size_t votes(const FeatureVector& x) const {
    std::size_t v = 0;
    for (const DecisionTree& t : trees) v += t.predict(x) ? 1 : 0;
    return v;
  }

  /// Strict majority; ties are "not linked".
  bool predict(const FeatureVector& x) const {
    return 2 * votes(x) > trees.size();
  }

  bool operator==(const ForestModel& o) const {
    return trees == o.trees && seed == o.seed &&
           training_size == o.training_size && degenerate == o.degenerate &&
           params.n_trees == o.params.n_trees &&
           params.max_depth == o.params.max_depth &&
           params.min_split == o.params.min_split &&
           params.features_per_split == o.params.features_per_split;
  }
};

namespace detail {

inline double gini(double pos, double total) {
  if (total <= 0) return 0.0;
  const double p = pos / total;
  return 2.0 * p * (1.0 - p);
}

class TreeBuilder {
 public:
  TreeBuilder(const std::vector<LabeledFeatures>& data,
              const ForestParams& params, std::uint64_t seed)
      : data_(data), params_(params), rng_(seed) {}

  DecisionTree build() {
    std::vector<std::uint32_t> sample(data_.size());
    for (auto& s : sample) {
      s = static_cast<std::uint32_t>(uniform_index(rng_, data_.size()));
    }
    tree_.nodes.clear();
    grow(sample, 0);
    return std::move(tree_);
  }

 private:
  struct Split {
    int feature = -1;
    double threshold = 0.0;
    double gain = 0.0;
  };

  std::uint32_t grow(std::vector<std::uint32_t>& sample, std::size_t depth) {
    const auto index = static_cast<std::uint32_t>(tree_.nodes.size());
    tree_.nodes.emplace_back();
    std::uint32_t pos = 0;
    for (std::uint32_t s : sample) pos += data_[s].linked ? 1 : 0;
    const auto total = static_cast<std::uint32_t>(sample.size());
    tree_.nodes[index].positives = pos;
    tree_.nodes[index].negatives = total - pos;
    if (depth >= params_.max_depth || total < params_.min_split || pos == 0 ||
        pos == total) {
      return index;
    }
    const Split split = best_split(sample, pos);
    if (split.feature < 0) return index;

    std::vector<std::uint32_t> left;
    std::vector<std::uint32_t> right;
    for (std::uint32_t s : sample) {
      (data_[s].features[static_cast<std::size_t>(split.feature)] <=
               split.threshold
           ? left
           : right)
          .push_back(s);
    }
    sample.clear();
    sample.shrink_to_fit();
    const std::uint32_t l = grow(left, depth + 1);
    const std::uint32_t r = grow(right, depth + 1);
    DecisionTree::Node& node = tree_.nodes[index];
    node.feature = split.feature;
    node.threshold = split.threshold;
    node.left = l;
    node.right = r;
    return index;
  }

  Split best_split(const std::vector<std::uint32_t>& sample,
                   std::uint32_t positives) {
    std::vector<std::size_t> features(kFeatureCount);
    std::iota(features.begin(), features.end(), 0);
    for (std::size_t i = 0; i < params_.features_per_split; ++i) {
      std::swap(features[i],
                features[i + uniform_index(rng_, kFeatureCount - i)]);
    }

    const auto total = static_cast<double>(sample.size());
    const double parent = gini(positives, total);
    Split best;
    std::vector<std::pair<double, bool>> column(sample.size());
    for (std::size_t k = 0; k < params_.features_per_split; ++k) {
      const std::size_t f = features[k];
      for (std::size_t i = 0; i < sample.size(); ++i) {
        const LabeledFeatures& row = data_[sample[i]];
        column[i] = {row.features[f], row.linked};
      }
      std::sort(column.begin(), column.end());
      double left_pos = 0;
      for (std::size_t i = 0; i + 1 < column.size(); ++i) {
        left_pos += column[i].second ? 1 : 0;
        if (column[i].first == column[i + 1].first) continue;
        const auto left_n = static_cast<double>(i + 1);
        const double right_n = total - left_n;
        const double right_pos = positives - left_pos;
        const double child = (left_n * gini(left_pos, left_n) +
                              right_n * gini(right_pos, right_n)) /
                             total;
        const double gain = parent - child;
        if (gain > best.gain + 1e-12) {
          double mid = column[i].first +
                       (column[i + 1].first - column[i].first) / 2.0;
          if (!(mid < column[i + 1].first)) mid = column[i].first;
          best = Split{static_cast<int>(f), mid, gain};
        }
      }
    }
    return best;
  }

  const std::vector<LabeledFeatures>& data_;
  const ForestParams& params_;
  std::mt19937_64 rng_;
  DecisionTree tree_;
};

}  // namespace detail

/// Trains a random forest of Gini-split trees on bootstrap samples. Each
/// tree draws from its own generator seeded by (seed, tree index), so
/// parallel and serial training produce the same model.
inline ForestModel train_forest(const std::vector<LabeledFeatures>& instances,
                                const ForestParams& params,
                                std::uint64_t seed) {
  params.validate();
  if (instances.empty()) throw Error("train_forest: no training instances");
  for (const LabeledFeatures& row : instances) {
    for (double v : row.features) {
      if (!std::isfinite(v)) throw Error("train_forest: non-finite feature");
    }
  }
  ForestModel model;
  model.params = params;
  model.seed = seed;
  model.training_size = instances.size();
  model.trees.resize(params.n_trees);

  const std::size_t positives = static_cast<std::size_t>(
      std::count_if(instances.begin(), instances.end(),
                    [](const LabeledFeatures& r) { return r.linked; }));
  if (positives == 0 || positives == instances.size()) {
    model.degenerate = true;
    DecisionTree::Node leaf;
    leaf.positives = static_cast<std::uint32_t>(positives);
    leaf.negatives = static_cast<std::uint32_t>(instances.size() - positives);
    for (DecisionTree& t : model.trees) t.nodes = {leaf};
    return model;
  }

  auto build = [&](std::size_t t) {
    detail::TreeBuilder builder(instances, params, derive_seed(seed, t));
    model.trees[t] = builder.build();
  };
  unsigned threads = params.threads ? params.threads
                                    : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(params.n_trees));
  if (threads <= 1) {
    for (std::size_t t = 0; t < params.n_trees; ++t) build(t);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t t = w; t < params.n_trees; t += threads) build(t);
      });
    }
  }
  return model;
}

/// Training rows for one documented comment: one row per linkable
/// statement, labeled by membership in `gold`.
inline std::vector<LabeledFeatures> training_rows(const SourceMethod& method,
                                                  const InnerComment& comment,
                                                  const LinkSet& gold) {
  const MethodAnalysis analysis(method);
  std::vector<LabeledFeatures> rows;
  for (std::size_t line : analysis.linkable()) {
    rows.push_back({extract_features(analysis, comment, line),
                    gold.contains(line)});
  }
  return rows;
}

/// Links every linkable statement that a strict majority of trees votes for.
inline LinkSet link_forest(const ForestModel& model, const SourceMethod& method,
                           const InnerComment& comment) {
  const MethodAnalysis analysis(method);
  LinkSet out;
  for (std::size_t line : analysis.linkable()) {
    if (model.predict(extract_features(analysis, comment, line))) {
      out.insert(line);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Serialization

inline constexpr std::string_view kForestFormat = "snipdoc.forest";
inline constexpr int kForestVersion = 1;

inline nlohmann::json forest_to_json(const ForestModel& model) {
  nlohmann::json trees = nlohmann::json::array();
  for (const DecisionTree& t : model.trees) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const DecisionTree::Node& n : t.nodes) {
      nodes.push_back({n.feature, n.threshold, n.left, n.right, n.negatives,
                       n.positives});
    }
    trees.push_back(std::move(nodes));
  }
  return {
      {"format", kForestFormat},
      {"version", kForestVersion},
      {"feature_schema", kFeatureSchema},
      {"feature_names", kFeatureNames},
      {"seed", model.seed},
      {"training_size", model.training_size},
      {"degenerate", model.degenerate},
      {"params",
       {{"n_trees", model.params.n_trees},
        {"max_depth", model.params.max_depth},
        {"min_split", model.params.min_split},
        {"features_per_split", model.params.features_per_split}}},
      {"trees", std::move(trees)},
  };
}

namespace detail {

inline ForestModel forest_body_from_json(const nlohmann::json& j) {
  ForestModel model;
  model.seed = j.at("seed").get<std::uint64_t>();
  model.training_size = j.at("training_size").get<std::size_t>();
  model.degenerate = j.at("degenerate").get<bool>();
  const auto& p = j.at("params");
  model.params.n_trees = p.at("n_trees").get<std::size_t>();
  model.params.max_depth = p.at("max_depth").get<std::size_t>();
  model.params.min_split = p.at("min_split").get<std::size_t>();
  model.params.features_per_split = p.at("features_per_split").get<std::size_t>();
  for (const auto& jt : j.at("trees")) {
    DecisionTree tree;
    for (const auto& jn : jt) {
      DecisionTree::Node n;
      n.feature = jn.at(0).get<int>();
      n.threshold = jn.at(1).get<double>();
      n.left = jn.at(2).get<std::uint32_t>();
      n.right = jn.at(3).get<std::uint32_t>();
      n.negatives = jn.at(4).get<std::uint32_t>();
      n.positives = jn.at(5).get<std::uint32_t>();
      if (n.feature >= static_cast<int>(kFeatureCount)) {
        throw SchemaError("forest model node uses unknown feature index");
      }
      const std::size_t here = tree.nodes.size();
      if (n.feature >= 0 && (n.left <= here || n.right <= here ||
                             n.left >= jt.size() || n.right >= jt.size())) {
        throw SchemaError("forest model node has a dangling child");
      }
      tree.nodes.push_back(n);
    }
    if (tree.nodes.empty()) throw SchemaError("forest model has an empty tree");
    model.trees.push_back(std::move(tree));
  }
  if (model.trees.size() != model.params.n_trees) {
    throw SchemaError("forest model tree count does not match n_trees");
  }
  return model;
}

}  // namespace detail

/// Fails closed on any format, version or feature-schema mismatch.
inline ForestModel forest_from_json(const nlohmann::json& j) {
  if (j.value("format", "") != kForestFormat ||
      j.value("version", 0) != kForestVersion) {
    throw SchemaError("not a snipdoc forest model (format/version mismatch)");
  }
  if (j.value("feature_schema", "") != kFeatureSchema) {
    throw SchemaError("forest model feature schema '" +
                      j.value("feature_schema", std::string("?")) +
                      "' does not match " + std::string(kFeatureSchema));
  }
  try {
    return detail::forest_body_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("malformed forest model: ") + e.what());
  }
}

}  // namespace snipdoc

#endif  // SNIPDOC_FOREST_HPP
