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

#ifndef SNIPDOC_ENCODER_HPP
#define SNIPDOC_ENCODER_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "snipdoc/common.hpp"
#include "snipdoc/extractor.hpp"
#include "snipdoc/java_lexer.hpp"
#include "snipdoc/porter_stemmer.hpp"
#include "snipdoc/text.hpp"

namespace snipdoc {

enum class Task { classification, linking, summarization };

inline std::string_view to_string(Task task) {
  switch (task) {
    case Task::classification:
      return "classification";
    case Task::linking:
      return "linking";
    case Task::summarization:
      return "summarization";
  }
  return "?";
}

inline Task task_from_string(std::string_view name) {
  if (name == "classification") return Task::classification;
  if (name == "linking") return Task::linking;
  if (name == "summarization") return Task::summarization;
  throw Error("unknown task: " + std::string(name));
}

inline constexpr std::string_view kSummaryLabel = "code summary";
inline constexpr std::string_view kOtherLabel = "other";

struct TaskInstance {
  Task task = Task::classification;
  std::string input_text;
  std::string target_text;
  std::string method_id;
  std::string comment_id;
  std::string path;  // grouping key for splits, not serialized
};

/// Strips comment markers, lowercases and stems word by word. Leading and
/// trailing punctuation is kept around the stemmed core of a word.
inline std::string preprocess_comment(std::string_view text) {
  PorterStemmer stemmer;
  std::vector<std::string> words;
  for (const std::string& raw : split_whitespace(to_lower(comment_body(text)))) {
    std::size_t b = 0;
    std::size_t e = raw.size();
    while (b < e && !(raw[b] >= 'a' && raw[b] <= 'z')) ++b;
    while (e > b && !(raw[e - 1] >= 'a' && raw[e - 1] <= 'z')) --e;
    words.push_back(raw.substr(0, b) + stemmer.stem(raw.substr(b, e - b)) +
                    raw.substr(e));
  }
  return join(words, " ");
}

/// At least five words after preprocessing and pure ASCII.
inline bool is_summary_candidate(std::string_view comment_text) {
  return is_ascii(comment_text) &&
         split_whitespace(preprocess_comment(comment_text)).size() >= 5;
}

namespace detail {

struct RenderSpec {
  const InnerComment* wrap = nullptr;    // surround with <comment> tags
  const InnerComment* remove = nullptr;  // drop from the text
  bool line_tags = false;                // <N> before linkable statements
  const LinkSet* runs = nullptr;         // <start>/<end> around runs
};

// Renders a method as one line of text: each physical line trimmed, empty
// lines dropped, pieces joined by single spaces.
inline std::string render_method(const SourceMethod& m, const RenderSpec& spec) {
  std::vector<std::string> pieces;
  std::size_t line_start = 0;
  for (const Statement& s : m.body_lines) {
    const std::size_t ls = line_start;
    const std::size_t le = ls + s.text.size();
    line_start = le + 1;
    std::string text;
    for (std::size_t i = ls; i <= le; ++i) {
      if (spec.wrap && i == spec.wrap->begin) text += "<comment>";
      if (spec.wrap && i == spec.wrap->end) text += "</comment>";
      if (i == le) break;
      if (spec.remove && i >= spec.remove->begin && i < spec.remove->end) {
        continue;
      }
      text.push_back(m.source[i]);
    }
    std::string piece(trim(text));
    if (piece.empty()) continue;
    if (spec.line_tags && s.linkable()) {
      piece = "<" + std::to_string(s.line_no) + "> " + piece;
    }
    if (spec.runs && spec.runs->contains(s.line_no)) {
      if (!spec.runs->contains(s.line_no - 1)) piece = "<start> " + piece;
      if (!spec.runs->contains(s.line_no + 1)) piece += " <end>";
    }
    pieces.push_back(std::move(piece));
  }
  return join(pieces, " ");
}

inline void require_comment_in(const SourceMethod& m, const InnerComment& c) {
  if (c.end > m.source.size() || c.begin >= c.end ||
      std::string_view(m.source).substr(c.begin, c.end - c.begin) != c.text) {
    throw Error("comment " + c.id + " is not part of method " + m.id);
  }
}

inline void require_linkable(const SourceMethod& m, const LinkSet& links) {
  for (std::size_t l : links) {
    if (l < 1 || l > m.line_count()) {
      throw Error("link line " + std::to_string(l) + " is outside method " +
                  m.id + " (" + std::to_string(m.line_count()) + " lines)");
    }
    if (!m.line(l).linkable()) {
      throw Error("link line " + std::to_string(l) + " of method " + m.id +
                  " is blank or comment-only");
    }
  }
}

}  // namespace detail

/// Method text with the comment of interest wrapped in <comment></comment>.
inline std::string encode_classification(const SourceMethod& method,
                                         const InnerComment& comment) {
  detail::require_comment_in(method, comment);
  return detail::render_method(method, {.wrap = &comment});
}

inline TaskInstance make_classification_instance(const SourceMethod& method,
                                                 const InnerComment& comment,
                                                 bool is_summary) {
  return {Task::classification, encode_classification(method, comment),
          std::string(is_summary ? kSummaryLabel : kOtherLabel), method.id,
          comment.id, method.path};
}

/// Link target: ascending `<N>` tags, e.g. `<1><2><4>`.
inline std::string encode_link_target(const LinkSet& links) {
  std::string out;
  for (std::size_t l : links) out += "<" + std::to_string(l) + ">";
  return out;
}

/// Classification encoding plus a `<N>` tag before every linkable statement.
/// The target is empty when no gold is given.
inline TaskInstance encode_linking(const SourceMethod& method,
                                   const InnerComment& comment,
                                   const std::optional<LinkSet>& gold) {
  detail::require_comment_in(method, comment);
  if (gold) detail::require_linkable(method, *gold);
  return {Task::linking,
          detail::render_method(method, {.wrap = &comment, .line_tags = true}),
          gold ? encode_link_target(*gold) : std::string(), method.id,
          comment.id, method.path};
}

/// Parses a stream of `<N>` tags (N >= 1, optional whitespace between
/// tags). Anything else yields nullopt, the "unparseable" signal.
inline std::optional<LinkSet> decode_link_target(std::string_view text) {
  LinkSet out;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && is_space(text[i])) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '<') return std::nullopt;
    ++i;
    std::size_t value = 0;
    std::size_t digits = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      if (value > 100000000) return std::nullopt;
      value = value * 10 + static_cast<std::size_t>(text[i] - '0');
      ++digits;
      ++i;
    }
    if (digits == 0 || i >= text.size() || text[i] != '>' || value == 0) {
      return std::nullopt;
    }
    ++i;
    out.insert(value);
    skip_space();
  }
  return out;
}

/// Summarization input: the method without the summarized comment, each
/// maximal run of consecutive linked lines wrapped in <start> ... <end>.
/// Target: the preprocessed comment.
inline TaskInstance encode_summarization(const SourceMethod& method,
                                         const InnerComment& comment,
                                         const LinkSet& links) {
  detail::require_comment_in(method, comment);
  if (links.empty()) {
    throw Error("encode_summarization: comment " + comment.id +
                " documents no statement");
  }
  detail::require_linkable(method, links);
  if (!is_summary_candidate(comment.text)) {
    throw Error("encode_summarization: comment " + comment.id +
                " is not a summary candidate");
  }
  return {Task::summarization,
          detail::render_method(method, {.remove = &comment, .runs = &links}),
          preprocess_comment(comment.text), method.id, comment.id,
          method.path};
}

/// Code between <start> and <end> markers, runs joined by a space.
inline std::string documented_code(std::string_view input) {
  static constexpr std::string_view kStart = "<start>";
  static constexpr std::string_view kEnd = "<end>";
  std::vector<std::string> runs;
  std::size_t at = 0;
  while (true) {
    const std::size_t s = input.find(kStart, at);
    if (s == std::string_view::npos) break;
    const std::size_t e = input.find(kEnd, s + kStart.size());
    if (e == std::string_view::npos) break;
    runs.emplace_back(trim(input.substr(s + kStart.size(), e - s - kStart.size())));
    at = e + kEnd.size();
  }
  return join(runs, " ");
}

/// Normalized token stream of an instance's documented snippet (the whole
/// input when it carries no <start> markers).
inline std::string snippet_key(const TaskInstance& instance) {
  const bool has_runs = instance.input_text.find("<start>") != std::string::npos;
  return join(tokenize(has_runs ? documented_code(instance.input_text)
                                : std::string_view(instance.input_text)),
              "\x1f");
}

/// One instance per normalized snippet token stream; first occurrence wins.
inline std::vector<TaskInstance> dedup_snippets(
    std::vector<TaskInstance> instances) {
  std::unordered_set<std::string> seen;
  std::vector<TaskInstance> out;
  for (TaskInstance& inst : instances) {
    if (seen.insert(snippet_key(inst)).second) out.push_back(std::move(inst));
  }
  return out;
}

enum class GroupKey { file, none };

struct SplitSpec {
  double train = 0.8;
  double eval = 0.1;
  double test = 0.1;
  GroupKey group_key = GroupKey::file;
  std::uint64_t seed = 42;
};

struct DatasetSplits {
  std::vector<TaskInstance> train;
  std::vector<TaskInstance> eval;
  std::vector<TaskInstance> test;
};

/// Seeded, group-aware split. Groups (files, or single instances) are
/// shuffled and dealt in order: a group joins train while fewer than
/// round(N * train) instances are there, then eval likewise, then test.
/// Instances keep their input order within each partition.
inline DatasetSplits split_dataset(std::vector<TaskInstance> instances,
                                   const SplitSpec& spec) {
  if (!(spec.train > 0 && spec.eval > 0 && spec.test > 0) ||
      std::abs(spec.train + spec.eval + spec.test - 1.0) > 1e-9) {
    throw Error("split ratios must be positive and sum to 1");
  }
  std::vector<std::vector<std::size_t>> groups;
  if (spec.group_key == GroupKey::file) {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < instances.size(); ++i) {
      auto [it, fresh] = index.emplace(instances[i].path, groups.size());
      if (fresh) groups.emplace_back();
      groups[it->second].push_back(i);
    }
  } else {
    for (std::size_t i = 0; i < instances.size(); ++i) groups.push_back({i});
  }
  if (groups.size() < 3) {
    throw Error("split_dataset: " + std::to_string(groups.size()) +
                " groups cannot fill three partitions");
  }
  std::mt19937_64 rng(spec.seed);
  seeded_shuffle(groups, rng);

  const auto n = static_cast<double>(instances.size());
  const auto train_target = static_cast<std::size_t>(std::llround(n * spec.train));
  const auto eval_target =
      train_target + static_cast<std::size_t>(std::llround(n * spec.eval));
  std::vector<int> partition(instances.size(), 2);
  std::size_t assigned = 0;
  for (const auto& g : groups) {
    const int p = assigned < train_target ? 0 : (assigned < eval_target ? 1 : 2);
    for (std::size_t i : g) partition[i] = p;
    assigned += g.size();
  }
  DatasetSplits out;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    auto& dest = partition[i] == 0 ? out.train
                                   : (partition[i] == 1 ? out.eval : out.test);
    dest.push_back(std::move(instances[i]));
  }
  return out;
}

}  // namespace snipdoc

#endif  // SNIPDOC_ENCODER_HPP
