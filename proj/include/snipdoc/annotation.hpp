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

#ifndef SNIPDOC_ANNOTATION_HPP
#define SNIPDOC_ANNOTATION_HPP

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "snipdoc/common.hpp"
#include "snipdoc/records.hpp"
#include "snipdoc/stats.hpp"

namespace snipdoc {

// Errors that the HTTP layer maps onto status codes.
class NotFoundError : public Error {
 public:
  using Error::Error;
};
class AuthorizationError : public Error {
 public:
  using Error::Error;
};
class WriteConflictError : public Error {
 public:
  using Error::Error;
};
class ValidationError : public Error {
 public:
  using Error::Error;
};

inline const std::vector<std::string>& builtin_categories() {
  static const std::vector<std::string> kCategories = {
      "summary", "rationale", "deprecation", "usage",     "exception", "todo",
      "incomplete", "commented_code", "formatter", "pointer", "orphan",
      "code_example"};
  return kCategories;
}

inline constexpr std::string_view kExtensionPrefix = "ext:";

enum class TaskStatus { pending, partially_labeled, labeled, conflicted, resolved };

inline std::string_view to_string(TaskStatus s) {
  switch (s) {
    case TaskStatus::pending:
      return "pending";
    case TaskStatus::partially_labeled:
      return "partially_labeled";
    case TaskStatus::labeled:
      return "labeled";
    case TaskStatus::conflicted:
      return "conflicted";
    case TaskStatus::resolved:
      return "resolved";
  }
  return "?";
}

inline TaskStatus task_status_from_string(std::string_view s) {
  for (TaskStatus t : {TaskStatus::pending, TaskStatus::partially_labeled,
                       TaskStatus::labeled, TaskStatus::conflicted,
                       TaskStatus::resolved}) {
    if (to_string(t) == s) return t;
  }
  throw SchemaError("unknown task status: " + std::string(s));
}

enum class ConflictKind { category, link, both };

inline std::string_view to_string(ConflictKind k) {
  switch (k) {
    case ConflictKind::category:
      return "category";
    case ConflictKind::link:
      return "link";
    case ConflictKind::both:
      return "both";
  }
  return "?";
}

inline ConflictKind conflict_kind_from_string(std::string_view s) {
  if (s == "category") return ConflictKind::category;
  if (s == "link") return ConflictKind::link;
  if (s == "both") return ConflictKind::both;
  throw SchemaError("unknown conflict kind: " + std::string(s));
}

struct LabelRecord {
  std::string task_id;
  std::string annotator_id;  // the resolver, for a resolution
  std::set<std::string> categories;
  LinkSet links;
  std::string timestamp;

  bool operator==(const LabelRecord&) const = default;
};

/// Numbered lines of a method as shown to annotators.
struct MethodView {
  std::string path;
  std::size_t file_line = 1;
  std::vector<std::string> lines;
  std::vector<bool> linkable;

  bool operator==(const MethodView&) const = default;
};

struct AnnotationTask {
  std::string task_id;
  std::string path;
  std::string method_id;
  std::string comment_id;
  std::string comment_text;
  std::size_t comment_line = 0;  // file line
  std::size_t start_line = 0;    // method-local
  std::size_t end_line = 0;
  std::array<std::string, 2> assignees;
  TaskStatus status = TaskStatus::pending;
  std::vector<LabelRecord> labels;
  std::optional<ConflictKind> conflict;
  std::optional<LabelRecord> resolution;

  bool assigned_to(std::string_view annotator) const {
    return assignees[0] == annotator || assignees[1] == annotator;
  }
  bool labeled_by(std::string_view annotator) const {
    return std::any_of(labels.begin(), labels.end(), [&](const LabelRecord& r) {
      return r.annotator_id == annotator;
    });
  }

  bool operator==(const AnnotationTask&) const = default;
};

struct Batch {
  std::vector<AnnotationTask> tasks;
  std::map<std::string, MethodView> methods;  // by method id
};

inline MethodView method_view(const SourceMethod& m) {
  MethodView v;
  v.path = m.path;
  v.file_line = m.file_line;
  for (const Statement& s : m.body_lines) {
    v.lines.push_back(s.text);
    v.linkable.push_back(s.linkable());
  }
  return v;
}

/// One task per sampled comment. Per file, at most `per_file_cap` comments
/// are drawn with a generator seeded from (seed, path); the rest are taken
/// whole. Assignees rotate through the pool: task k gets pool[k % P] and
/// pool[(k + 1) % P].
inline Batch create_batch(const std::vector<ManifestEntry>& manifest,
                          const std::vector<std::string>& pool,
                          std::size_t per_file_cap, std::uint64_t seed,
                          std::size_t first_task_number = 1) {
  if (pool.size() < 3) {
    throw Error("create_batch: the annotator pool needs at least 3 members");
  }
  if (std::set<std::string>(pool.begin(), pool.end()).size() != pool.size()) {
    throw Error("create_batch: duplicate annotator ids in pool");
  }
  if (manifest.empty()) throw Error("create_batch: empty manifest");
  if (per_file_cap == 0) throw Error("create_batch: per-file cap must be positive");

  std::map<std::string, std::vector<std::pair<const ManifestEntry*, const InnerComment*>>>
      by_file;
  for (const ManifestEntry& e : manifest) {
    for (const InnerComment& c : e.comments) by_file[e.method.path].emplace_back(&e, &c);
  }
  Batch batch;
  std::size_t k = 0;
  for (auto& [path, comments] : by_file) {
    std::vector<std::size_t> chosen(comments.size());
    for (std::size_t i = 0; i < chosen.size(); ++i) chosen[i] = i;
    if (chosen.size() > per_file_cap) {
      std::mt19937_64 rng(derive_seed(seed, "batch:" + path));
      seeded_shuffle(chosen, rng);
      chosen.resize(per_file_cap);
      std::sort(chosen.begin(), chosen.end());
    }
    for (std::size_t i : chosen) {
      const SourceMethod& m = comments[i].first->method;
      const InnerComment& c = *comments[i].second;
      AnnotationTask t;
      char id[32];
      std::snprintf(id, sizeof id, "task-%06zu", first_task_number + k);
      t.task_id = id;
      t.path = path;
      t.method_id = m.id;
      t.comment_id = c.id;
      t.comment_text = c.text;
      t.comment_line = comment_file_line(m, c);
      t.start_line = c.start_line;
      t.end_line = c.end_line;
      t.assignees = {pool[k % pool.size()], pool[(k + 1) % pool.size()]};
      batch.tasks.push_back(std::move(t));
      batch.methods.try_emplace(m.id, method_view(m));
      ++k;
    }
  }
  return batch;
}

/// Compares the two independent labels of a task. Precondition: both
/// records present.
inline std::optional<ConflictKind> detect_conflicts(const AnnotationTask& task) {
  if (task.labels.size() != 2) {
    throw Error("detect_conflicts: task " + task.task_id + " has " +
                std::to_string(task.labels.size()) + " of 2 labels");
  }
  const LabelRecord& a = task.labels[0];
  const LabelRecord& b = task.labels[1];
  const bool cats = a.categories != b.categories;
  const bool links = a.links != b.links;
  if (cats && links) return ConflictKind::both;
  if (cats) return ConflictKind::category;
  if (links) return ConflictKind::link;
  return std::nullopt;
}

/// The adjudicated label of an exportable task.
inline const LabelRecord& gold_label(const AnnotationTask& t) {
  return t.resolution ? *t.resolution : t.labels.at(0);
}

// ---------------------------------------------------------------------------
// JSON forms

inline json label_to_json(const LabelRecord& r) {
  return json{{"task_id", r.task_id},
              {"annotator_id", r.annotator_id},
              {"categories", r.categories},
              {"links", r.links},
              {"timestamp", r.timestamp}};
}

inline LabelRecord label_from_json(const json& j) {
  LabelRecord r;
  r.task_id = field<std::string>(j, "task_id");
  r.annotator_id = field<std::string>(j, "annotator_id");
  r.categories = field<std::set<std::string>>(j, "categories");
  r.links = field<LinkSet>(j, "links");
  r.timestamp = field<std::string>(j, "timestamp");
  return r;
}

inline json task_to_json(const AnnotationTask& t) {
  json labels = json::array();
  for (const LabelRecord& r : t.labels) labels.push_back(label_to_json(r));
  return json{{"task_id", t.task_id},
              {"path", t.path},
              {"method_id", t.method_id},
              {"comment_id", t.comment_id},
              {"comment_text", t.comment_text},
              {"comment_line", t.comment_line},
              {"start_line", t.start_line},
              {"end_line", t.end_line},
              {"assignees", t.assignees},
              {"status", to_string(t.status)},
              {"labels", std::move(labels)},
              {"conflict", t.conflict ? json(to_string(*t.conflict)) : json(nullptr)},
              {"resolution", t.resolution ? label_to_json(*t.resolution) : json(nullptr)}};
}

inline AnnotationTask task_from_json(const json& j) {
  AnnotationTask t;
  t.task_id = field<std::string>(j, "task_id");
  t.path = field<std::string>(j, "path");
  t.method_id = field<std::string>(j, "method_id");
  t.comment_id = field<std::string>(j, "comment_id");
  t.comment_text = field<std::string>(j, "comment_text");
  t.comment_line = field<std::size_t>(j, "comment_line");
  t.start_line = field<std::size_t>(j, "start_line");
  t.end_line = field<std::size_t>(j, "end_line");
  t.assignees = field<std::array<std::string, 2>>(j, "assignees");
  t.status = task_status_from_string(field<std::string>(j, "status"));
  for (const json& r : field<json>(j, "labels")) t.labels.push_back(label_from_json(r));
  if (j.contains("conflict") && !j["conflict"].is_null()) {
    t.conflict = conflict_kind_from_string(field<std::string>(j, "conflict"));
  }
  if (j.contains("resolution") && !j["resolution"].is_null()) {
    t.resolution = label_from_json(j["resolution"]);
  }
  return t;
}

inline json view_to_json(const MethodView& v) {
  return json{{"path", v.path},
              {"file_line", v.file_line},
              {"lines", v.lines},
              {"linkable", v.linkable}};
}

inline MethodView view_from_json(const json& j) {
  MethodView v;
  v.path = field<std::string>(j, "path");
  v.file_line = field<std::size_t>(j, "file_line");
  v.lines = field<std::vector<std::string>>(j, "lines");
  v.linkable = field<std::vector<bool>>(j, "linkable");
  return v;
}

// ---------------------------------------------------------------------------
// Reports

struct CategoryStats {
  std::size_t count = 0;
  double links_mean = 0.0;
  double links_median = 0.0;
  double links_sd = 0.0;  // sample standard deviation; 0 for n < 2
};

inline CategoryStats describe_counts(std::vector<double> values) {
  CategoryStats s;
  s.count = values.size();
  if (values.empty()) return s;
  std::sort(values.begin(), values.end());
  const auto n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  s.links_mean = sum / n;
  const std::size_t mid = values.size() / 2;
  s.links_median = values.size() % 2 ? values[mid] : (values[mid - 1] + values[mid]) / 2.0;
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.links_mean) * (v - s.links_mean);
    s.links_sd = std::sqrt(ss / (n - 1.0));
  }
  return s;
}

struct GoldExport {
  std::vector<json> records;
  std::map<std::string, CategoryStats> taxonomy;

  json header() const {
    json h = make_header(schema::kGold);
    h["exported"] = records.size();
    json tax = json::object();
    for (const auto& [name, s] : taxonomy) {
      tax[name] = {{"count", s.count},
                   {"links_mean", s.links_mean},
                   {"links_median", s.links_median},
                   {"links_sd", s.links_sd}};
    }
    h["taxonomy"] = std::move(tax);
    return h;
  }
};

struct ConflictReport {
  std::size_t labeled = 0;    // tasks with two submissions
  std::size_t conflicts = 0;  // of those, tasks whose labels disagreed
  std::map<std::string, std::size_t> by_kind;
  double rate = 0.0;
  std::optional<double> kappa;  // on category sets of the two annotators

  json to_json() const {
    return json{{"labeled", labeled},
                {"conflicts", conflicts},
                {"by_kind", by_kind},
                {"rate", rate},
                {"kappa", kappa ? json(*kappa) : json(nullptr)}};
  }
};

// ---------------------------------------------------------------------------
// Store

inline std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline constexpr std::string_view kStoreSchema = "snipdoc.annotation_store";

/// Task state behind one writer lock. When given a directory, every change
/// is appended to `log.jsonl` (with a sequence number) before it becomes
/// visible, and `snapshot.json` is rewritten every `snapshot_every`
/// events. Opening replays the snapshot, then log entries past it.
class AnnotationStore {
 public:
  using Clock = std::function<std::string()>;

  explicit AnnotationStore(std::optional<std::filesystem::path> dir = std::nullopt,
                           Clock clock = utc_timestamp,
                           std::size_t snapshot_every = 64)
      : dir_(std::move(dir)), clock_(std::move(clock)), snapshot_every_(snapshot_every) {
    if (dir_) open();
  }

  AnnotationStore(const AnnotationStore&) = delete;
  AnnotationStore& operator=(const AnnotationStore&) = delete;

  void add_batch(const Batch& batch) {
    std::unique_lock lock(mu_);
    for (const AnnotationTask& t : batch.tasks) {
      if (task_index_.contains(t.task_id)) {
        throw WriteConflictError("task already exists: " + t.task_id);
      }
      if (t.assignees[0] == t.assignees[1]) {
        throw ValidationError("task " + t.task_id + " needs two distinct assignees");
      }
    }
    json tasks = json::array();
    for (const AnnotationTask& t : batch.tasks) tasks.push_back(task_to_json(t));
    json methods = json::object();
    for (const auto& [id, v] : batch.methods) methods[id] = view_to_json(v);
    commit({{"type", "batch"}, {"tasks", std::move(tasks)}, {"methods", std::move(methods)}});
  }

  /// Records one independent label and returns the new task status.
  TaskStatus submit_label(const std::string& task_id, const std::string& annotator,
                          std::set<std::string> categories, LinkSet links) {
    std::unique_lock lock(mu_);
    const AnnotationTask& t = find_locked(task_id);
    if (!t.assigned_to(annotator)) {
      throw AuthorizationError(annotator + " is not assigned to " + task_id);
    }
    if (t.labeled_by(annotator)) {
      throw WriteConflictError(annotator + " already labeled " + task_id);
    }
    validate_label_locked(t, categories, links);
    LabelRecord r{task_id, annotator, std::move(categories), std::move(links), clock_()};
    commit({{"type", "label"}, {"record", label_to_json(r)}});
    return find_locked(task_id).status;
  }

  /// Third-party adjudication of a conflicted task.
  AnnotationTask resolve(const std::string& task_id, const std::string& resolver,
                         std::set<std::string> categories, LinkSet links) {
    std::unique_lock lock(mu_);
    const AnnotationTask& t = find_locked(task_id);
    if (t.assigned_to(resolver)) {
      throw AuthorizationError(resolver + " labeled " + task_id +
                               " and cannot resolve it");
    }
    if (t.status != TaskStatus::conflicted) {
      throw WriteConflictError(task_id + " is " + std::string(to_string(t.status)) +
                               ", not conflicted");
    }
    validate_label_locked(t, categories, links);
    LabelRecord r{task_id, resolver, std::move(categories), std::move(links), clock_()};
    commit({{"type", "resolution"}, {"record", label_to_json(r)}});
    return find_locked(task_id);
  }

  /// Adds an annotator-defined category; returns its namespaced name.
  std::string add_category(std::string_view name) {
    std::string full(name);
    if (!full.starts_with(kExtensionPrefix)) full = std::string(kExtensionPrefix) + full;
    const std::string_view bare = std::string_view(full).substr(kExtensionPrefix.size());
    if (bare.empty() || trim(bare) != bare) {
      throw ValidationError("invalid category name: '" + std::string(name) + "'");
    }
    std::unique_lock lock(mu_);
    if (extensions_.contains(full)) throw WriteConflictError("category exists: " + full);
    commit({{"type", "category"}, {"name", full}});
    return full;
  }

  std::vector<std::string> categories() const {
    std::shared_lock lock(mu_);
    std::vector<std::string> out = builtin_categories();
    out.insert(out.end(), extensions_.begin(), extensions_.end());
    return out;
  }

  std::optional<AnnotationTask> task(const std::string& task_id) const {
    std::shared_lock lock(mu_);
    auto it = task_index_.find(task_id);
    if (it == task_index_.end()) return std::nullopt;
    return tasks_[it->second];
  }

  std::optional<MethodView> method(const std::string& method_id) const {
    std::shared_lock lock(mu_);
    auto it = methods_.find(method_id);
    if (it == methods_.end()) return std::nullopt;
    return it->second;
  }

  /// Tasks still awaiting this annotator's label, oldest first.
  std::vector<AnnotationTask> assignments(const std::string& annotator) const {
    std::shared_lock lock(mu_);
    std::vector<AnnotationTask> out;
    for (const AnnotationTask& t : tasks_) {
      if (t.assigned_to(annotator) && !t.labeled_by(annotator) &&
          (t.status == TaskStatus::pending ||
           t.status == TaskStatus::partially_labeled)) {
        out.push_back(t);
      }
    }
    return out;
  }

  /// Unresolved conflicts; with a resolver, only those it may adjudicate.
  std::vector<AnnotationTask> open_conflicts(
      const std::optional<std::string>& resolver = std::nullopt) const {
    std::shared_lock lock(mu_);
    std::vector<AnnotationTask> out;
    for (const AnnotationTask& t : tasks_) {
      if (t.status == TaskStatus::conflicted && !(resolver && t.assigned_to(*resolver))) {
        out.push_back(t);
      }
    }
    return out;
  }

  std::vector<AnnotationTask> tasks() const {
    std::shared_lock lock(mu_);
    return tasks_;
  }

  std::size_t size() const {
    std::shared_lock lock(mu_);
    return tasks_.size();
  }

  std::uint64_t sequence() const {
    std::shared_lock lock(mu_);
    return seq_;
  }

  /// Gold triplets of labeled (agreeing) and resolved tasks, by task id,
  /// with per-category statistics of documented statement counts.
  GoldExport export_gold() const {
    std::shared_lock lock(mu_);
    GoldExport out;
    std::map<std::string, std::vector<double>> per_category;
    std::vector<const AnnotationTask*> ordered;
    for (const AnnotationTask& t : tasks_) {
      if (t.status == TaskStatus::labeled || t.status == TaskStatus::resolved) {
        ordered.push_back(&t);
      }
    }
    std::sort(ordered.begin(), ordered.end(),
              [](const AnnotationTask* a, const AnnotationTask* b) {
                return a->task_id < b->task_id;
              });
    for (const AnnotationTask* t : ordered) {
      const LabelRecord& g = gold_label(*t);
      json labels = json::array();
      for (const LabelRecord& r : t->labels) labels.push_back(label_to_json(r));
      out.records.push_back(
          json{{"task_id", t->task_id},
               {"method_id", t->method_id},
               {"comment_id", t->comment_id},
               {"path", t->path},
               {"comment_line", t->comment_line},
               {"start_line", t->start_line},
               {"end_line", t->end_line},
               {"comment_text", t->comment_text},
               {"categories", g.categories},
               {"links", g.links},
               {"status", to_string(t->status)},
               {"annotators", t->assignees},
               {"labels", std::move(labels)},
               {"conflict", t->conflict ? json(to_string(*t->conflict)) : json(nullptr)},
               {"resolution",
                t->resolution ? label_to_json(*t->resolution) : json(nullptr)}});
      for (const std::string& c : g.categories) {
        per_category[c].push_back(static_cast<double>(g.links.size()));
      }
    }
    for (auto& [name, values] : per_category) {
      out.taxonomy[name] = describe_counts(std::move(values));
    }
    return out;
  }

  /// Rebuilds a store from exported gold records (an export of the result
  /// equals the input export).
  static std::unique_ptr<AnnotationStore> import_gold(const std::vector<json>& records,
                                                      Clock clock = utc_timestamp) {
    auto store = std::make_unique<AnnotationStore>(std::nullopt, std::move(clock));
    for (const json& r : records) {
      AnnotationTask t;
      t.task_id = field<std::string>(r, "task_id");
      t.method_id = field<std::string>(r, "method_id");
      t.comment_id = field<std::string>(r, "comment_id");
      t.path = field<std::string>(r, "path");
      t.comment_line = field<std::size_t>(r, "comment_line");
      t.start_line = field<std::size_t>(r, "start_line");
      t.end_line = field<std::size_t>(r, "end_line");
      t.comment_text = field<std::string>(r, "comment_text");
      t.assignees = field<std::array<std::string, 2>>(r, "annotators");
      t.status = task_status_from_string(field<std::string>(r, "status"));
      for (const json& l : field<json>(r, "labels")) t.labels.push_back(label_from_json(l));
      if (!r["conflict"].is_null()) {
        t.conflict = conflict_kind_from_string(field<std::string>(r, "conflict"));
      }
      if (!r["resolution"].is_null()) t.resolution = label_from_json(r["resolution"]);
      if (t.status != TaskStatus::labeled && t.status != TaskStatus::resolved) {
        throw SchemaError("gold record " + t.task_id + " is not labeled or resolved");
      }
      for (const std::string& c : gold_label(t).categories) {
        if (c.starts_with(kExtensionPrefix)) store->extensions_.insert(c);
      }
      store->task_index_[t.task_id] = store->tasks_.size();
      store->tasks_.push_back(std::move(t));
    }
    return store;
  }

  ConflictReport conflict_report() const {
    std::shared_lock lock(mu_);
    ConflictReport rep;
    std::vector<std::string> first;
    std::vector<std::string> second;
    for (const AnnotationTask& t : tasks_) {
      if (t.labels.size() != 2) continue;
      ++rep.labeled;
      if (t.conflict) {
        ++rep.conflicts;
        ++rep.by_kind[std::string(to_string(*t.conflict))];
      }
      const auto key = [](const LabelRecord& r) {
        return join(std::vector<std::string>(r.categories.begin(), r.categories.end()),
                    "+");
      };
      first.push_back(key(t.labels[0]));
      second.push_back(key(t.labels[1]));
    }
    for (ConflictKind k : {ConflictKind::category, ConflictKind::link, ConflictKind::both}) {
      rep.by_kind.try_emplace(std::string(to_string(k)), 0);
    }
    if (rep.labeled > 0) {
      rep.rate = static_cast<double>(rep.conflicts) / static_cast<double>(rep.labeled);
      rep.kappa = cohens_kappa(first, second);
    }
    return rep;
  }

  /// Writes a snapshot now (also done automatically).
  void snapshot() {
    std::unique_lock lock(mu_);
    write_snapshot_locked();
  }

 private:
  const AnnotationTask& find_locked(const std::string& task_id) const {
    auto it = task_index_.find(task_id);
    if (it == task_index_.end()) throw NotFoundError("no such task: " + task_id);
    return tasks_[it->second];
  }

  AnnotationTask& find_locked(const std::string& task_id) {
    auto it = task_index_.find(task_id);
    if (it == task_index_.end()) throw NotFoundError("no such task: " + task_id);
    return tasks_[it->second];
  }

  void validate_label_locked(const AnnotationTask& t,
                             const std::set<std::string>& categories,
                             const LinkSet& links) const {
    if (categories.empty()) throw ValidationError("at least one category is required");
    const auto& builtin = builtin_categories();
    for (const std::string& c : categories) {
      if (std::find(builtin.begin(), builtin.end(), c) == builtin.end() &&
          !extensions_.contains(c)) {
        throw ValidationError("unknown category: " + c);
      }
    }
    auto mv = methods_.find(t.method_id);
    for (std::size_t l : links) {
      if (l == 0) throw ValidationError("line numbers start at 1");
      if (mv != methods_.end()) {
        const MethodView& v = mv->second;
        if (l > v.lines.size() || !v.linkable[l - 1]) {
          throw ValidationError("line " + std::to_string(l) + " of " + t.task_id +
                                " is not a linkable statement");
        }
      }
    }
  }

  // Persists then applies one event. Caller holds the writer lock.
  void commit(json event) {
    event["seq"] = seq_ + 1;
    if (dir_) {
      std::ofstream log(*dir_ / "log.jsonl", std::ios::binary | std::ios::app);
      log << event.dump() << '\n';
      log.flush();
      if (!log) throw Error("cannot append to annotation log");
    }
    apply(event);
    if (dir_ && snapshot_every_ > 0 && seq_ % snapshot_every_ == 0) {
      write_snapshot_locked();
    }
  }

  void apply(const json& event) {
    const auto type = field<std::string>(event, "type");
    if (type == "batch") {
      for (const json& j : event["tasks"]) {
        AnnotationTask t = task_from_json(j);
        task_index_[t.task_id] = tasks_.size();
        tasks_.push_back(std::move(t));
      }
      for (const auto& [id, v] : event["methods"].items()) {
        methods_.try_emplace(id, view_from_json(v));
      }
    } else if (type == "label") {
      LabelRecord r = label_from_json(event["record"]);
      AnnotationTask& t = find_locked(r.task_id);
      t.labels.push_back(std::move(r));
      if (t.labels.size() == 1) {
        t.status = TaskStatus::partially_labeled;
      } else {
        t.conflict = detect_conflicts(t);
        t.status = t.conflict ? TaskStatus::conflicted : TaskStatus::labeled;
      }
    } else if (type == "resolution") {
      LabelRecord r = label_from_json(event["record"]);
      AnnotationTask& t = find_locked(r.task_id);
      t.resolution = std::move(r);
      t.status = TaskStatus::resolved;
    } else if (type == "category") {
      extensions_.insert(field<std::string>(event, "name"));
    } else {
      throw SchemaError("unknown annotation event: " + type);
    }
    seq_ = field<std::uint64_t>(event, "seq");
  }

  void write_snapshot_locked() {
    if (!dir_) return;
    json tasks = json::array();
    for (const AnnotationTask& t : tasks_) tasks.push_back(task_to_json(t));
    json methods = json::object();
    for (const auto& [id, v] : methods_) methods[id] = view_to_json(v);
    const json snap{{"schema", kStoreSchema},
                    {"version", schema::kVersion},
                    {"seq", seq_},
                    {"tasks", std::move(tasks)},
                    {"methods", std::move(methods)},
                    {"extensions", extensions_}};
    const auto tmp = *dir_ / "snapshot.json.tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << snap.dump() << '\n';
      if (!out) throw Error("cannot write annotation snapshot");
    }
    std::filesystem::rename(tmp, *dir_ / "snapshot.json");
    // Entries up to seq_ are in the snapshot now.
    std::ofstream(*dir_ / "log.jsonl", std::ios::binary | std::ios::trunc);
  }

  void open() {
    std::filesystem::create_directories(*dir_);
    const auto snap_path = *dir_ / "snapshot.json";
    if (std::filesystem::exists(snap_path)) {
      std::ifstream in(snap_path, std::ios::binary);
      json snap;
      try {
        snap = json::parse(in);
      } catch (const json::parse_error& e) {
        throw SchemaError("corrupt annotation snapshot: " + std::string(e.what()));
      }
      if (snap.value("schema", "") != kStoreSchema ||
          snap.value("version", 0) != schema::kVersion) {
        throw SchemaError("unsupported annotation snapshot");
      }
      for (const json& j : snap["tasks"]) {
        AnnotationTask t = task_from_json(j);
        task_index_[t.task_id] = tasks_.size();
        tasks_.push_back(std::move(t));
      }
      for (const auto& [id, v] : snap["methods"].items()) methods_[id] = view_from_json(v);
      for (const json& e : snap["extensions"]) extensions_.insert(e.get<std::string>());
      seq_ = field<std::uint64_t>(snap, "seq");
    }
    std::ifstream log(*dir_ / "log.jsonl", std::ios::binary);
    std::string line;
    while (std::getline(log, line)) {
      if (trim(line).empty()) continue;
      json event;
      try {
        event = json::parse(line);
      } catch (const json::parse_error&) {
        break;  // torn final write
      }
      if (field<std::uint64_t>(event, "seq") <= seq_) continue;
      apply(event);
    }
  }

  std::optional<std::filesystem::path> dir_;
  Clock clock_;
  std::size_t snapshot_every_;
  mutable std::shared_mutex mu_;
  std::vector<AnnotationTask> tasks_;
  std::map<std::string, std::size_t> task_index_;
  std::map<std::string, MethodView> methods_;
  std::set<std::string> extensions_;
  std::uint64_t seq_ = 0;
};

}  // namespace snipdoc

#endif  // SNIPDOC_ANNOTATION_HPP
