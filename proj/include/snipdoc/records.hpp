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

// Line-delimited JSON artifacts. Line 1 of every file is a header object
// {"schema": "snipdoc.<kind>", "version": N, ...}; each further line is one
// record. Field names are listed in README.md.

#ifndef SNIPDOC_RECORDS_HPP
#define SNIPDOC_RECORDS_HPP

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "snipdoc/common.hpp"
#include "snipdoc/encoder.hpp"
#include "snipdoc/extractor.hpp"

namespace snipdoc {

using json = nlohmann::json;

namespace schema {
inline constexpr std::string_view kManifest = "snipdoc.manifest";
inline constexpr std::string_view kDataset = "snipdoc.dataset";
inline constexpr std::string_view kLinkPredictions = "snipdoc.predictions.linking";
inline constexpr std::string_view kSummaryPredictions =
    "snipdoc.predictions.summarization";
inline constexpr std::string_view kReport = "snipdoc.report";
inline constexpr std::string_view kGold = "snipdoc.gold";
inline constexpr int kVersion = 1;
}  // namespace schema

inline json make_header(std::string_view kind) {
  return json{{"schema", kind}, {"version", schema::kVersion}};
}

struct JsonlFile {
  json header;
  std::vector<json> records;
};

/// Reads and validates a JSONL artifact. The header must name `kind` and
/// the supported version; otherwise SchemaError.
inline JsonlFile read_jsonl(const std::filesystem::path& path, std::string_view kind) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  JsonlFile out;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw SchemaError(path.string() + ":" + std::to_string(line_no) +
                        ": invalid JSON: " + e.what());
    }
    if (!have_header) {
      if (!j.is_object() || !j.contains("schema") || !j.contains("version")) {
        throw SchemaError(path.string() + ": missing schema header");
      }
      if (j["schema"] != kind) {
        throw SchemaError(path.string() + ": expected schema " + std::string(kind) +
                          ", found " + j["schema"].dump());
      }
      if (j["version"] != schema::kVersion) {
        throw SchemaError(path.string() + ": unsupported " + std::string(kind) +
                          " version " + j["version"].dump());
      }
      out.header = std::move(j);
      have_header = true;
      continue;
    }
    if (!j.is_object()) {
      throw SchemaError(path.string() + ":" + std::to_string(line_no) +
                        ": record is not an object");
    }
    out.records.push_back(std::move(j));
  }
  if (!have_header) throw SchemaError(path.string() + ": empty file, no header");
  return out;
}

inline void write_jsonl(const std::filesystem::path& path, const json& header,
                        const std::vector<json>& records) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << header.dump() << '\n';
  for (const json& r : records) out << r.dump() << '\n';
  if (!out) throw Error("write failed: " + path.string());
}

/// Typed field access that reports the record and field on failure.
template <typename T>
T field(const json& record, std::string_view name) {
  auto it = record.find(name);
  if (it == record.end()) {
    throw SchemaError("record lacks field '" + std::string(name) + "': " +
                      record.dump().substr(0, 120));
  }
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw SchemaError("field '" + std::string(name) + "' has the wrong type: " +
                      it->dump().substr(0, 120));
  }
}

// ---------------------------------------------------------------------------
// Manifest

struct ManifestEntry {
  SourceMethod method;
  std::vector<InnerComment> comments;
};

inline json comment_to_json(const InnerComment& c) {
  return json{{"id", c.id},
              {"kind", to_string(c.kind)},
              {"text", c.text},
              {"start_line", c.start_line},
              {"end_line", c.end_line},
              {"trailing", c.trailing}};
}

inline json method_to_json(const SourceMethod& m,
                           const std::vector<InnerComment>& comments) {
  json body = json::array();
  for (const Statement& s : m.body_lines) body.push_back(s.text);
  json cs = json::array();
  for (const InnerComment& c : comments) cs.push_back(comment_to_json(c));
  return json{{"method_id", m.id},
              {"project", m.project},
              {"path", m.path},
              {"name", m.name},
              {"is_test", m.is_test},
              {"token_count", m.token_count()},
              {"file_line", m.file_line},
              {"body_offset", m.body_offset},
              {"source", m.source},
              {"body", std::move(body)},
              {"comments", std::move(cs)}};
}

/// Rebuilds a method from its record. Statements, tokens and comments are
/// recomputed from `source`; a stored id that disagrees is a SchemaError.
inline ManifestEntry method_from_json(const json& r) {
  MethodHeader h;
  h.project = field<std::string>(r, "project");
  h.path = field<std::string>(r, "path");
  h.name = field<std::string>(r, "name");
  h.file_line = field<std::size_t>(r, "file_line");
  h.is_test = field<bool>(r, "is_test");
  ManifestEntry e;
  e.method = analyze_method(std::move(h), field<std::string>(r, "source"),
                            field<std::size_t>(r, "body_offset"));
  const auto stored = field<std::string>(r, "method_id");
  if (e.method.id != stored) {
    throw SchemaError("manifest record " + stored + " does not match its source");
  }
  e.comments = extract_inner_comments(e.method);
  return e;
}

inline json manifest_header(const CorpusManifest& m) {
  json h = make_header(schema::kManifest);
  h["files"] = m.files;
  h["methods"] = m.methods.size();
  h["skipped"] = m.skipped;
  return h;
}

inline void write_manifest(const std::filesystem::path& path, const CorpusManifest& m) {
  std::vector<json> records;
  records.reserve(m.methods.size());
  for (const SourceMethod& method : m.methods) {
    records.push_back(method_to_json(method, extract_inner_comments(method)));
  }
  write_jsonl(path, manifest_header(m), records);
}

inline std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path) {
  JsonlFile f = read_jsonl(path, schema::kManifest);
  std::vector<ManifestEntry> out;
  out.reserve(f.records.size());
  for (const json& r : f.records) out.push_back(method_from_json(r));
  return out;
}

/// Lookup of methods and comments by id, plus (path, file line) of each
/// comment's first line.
class ManifestIndex {
 public:
  struct Ref {
    const SourceMethod* method;
    const InnerComment* comment;
  };

  explicit ManifestIndex(const std::vector<ManifestEntry>& entries) {
    for (const ManifestEntry& e : entries) {
      methods_[e.method.id] = &e.method;
      for (const InnerComment& c : e.comments) {
        const Ref ref{&e.method, &c};
        by_id_[c.id] = ref;
        by_location_[{e.method.path, e.method.file_line + c.start_line - 1}] = ref;
      }
    }
  }

  std::optional<Ref> comment(const std::string& id) const {
    auto it = by_id_.find(id);
    if (it == by_id_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<Ref> comment_at(const std::string& path, std::size_t file_line) const {
    auto it = by_location_.find({path, file_line});
    if (it == by_location_.end()) return std::nullopt;
    return it->second;
  }

  const SourceMethod* method(const std::string& id) const {
    auto it = methods_.find(id);
    return it == methods_.end() ? nullptr : it->second;
  }

 private:
  std::map<std::string, const SourceMethod*> methods_;
  std::map<std::string, Ref> by_id_;
  std::map<std::pair<std::string, std::size_t>, Ref> by_location_;
};

inline std::size_t comment_file_line(const SourceMethod& m, const InnerComment& c) {
  return m.file_line + c.start_line - 1;
}

// ---------------------------------------------------------------------------
// Datasets

inline json instance_to_json(const TaskInstance& t, std::string_view split) {
  return json{{"task", to_string(t.task)},
              {"input_text", t.input_text},
              {"target_text", t.target_text},
              {"method_id", t.method_id},
              {"comment_id", t.comment_id},
              {"split", split}};
}

inline TaskInstance instance_from_json(const json& r) {
  TaskInstance t;
  try {
    t.task = task_from_string(field<std::string>(r, "task"));
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(e.what());
  }
  t.input_text = field<std::string>(r, "input_text");
  t.target_text = field<std::string>(r, "target_text");
  t.method_id = field<std::string>(r, "method_id");
  t.comment_id = field<std::string>(r, "comment_id");
  return t;
}

inline std::vector<TaskInstance> read_dataset(const std::filesystem::path& path) {
  JsonlFile f = read_jsonl(path, schema::kDataset);
  std::vector<TaskInstance> out;
  for (const json& r : f.records) out.push_back(instance_from_json(r));
  return out;
}

inline void write_dataset(const std::filesystem::path& path, Task task,
                          std::string_view split,
                          const std::vector<TaskInstance>& instances) {
  json h = make_header(schema::kDataset);
  h["task"] = to_string(task);
  h["split"] = split;
  h["count"] = instances.size();
  std::vector<json> records;
  for (const TaskInstance& t : instances) records.push_back(instance_to_json(t, split));
  write_jsonl(path, h, records);
}

// ---------------------------------------------------------------------------
// Gold labels

/// One adjudicated comment: categories and documented lines.
struct GoldLabel {
  std::string comment_id;  // may be empty; then (path, comment_line) joins
  std::string method_id;
  std::string path;
  std::size_t comment_line = 0;
  std::vector<std::string> categories;
  LinkSet links;
};

inline bool has_category(const GoldLabel& g, std::string_view category) {
  for (const std::string& c : g.categories) {
    if (c == category) return true;
  }
  return false;
}

inline GoldLabel gold_from_json(const json& r) {
  GoldLabel g;
  if (r.contains("comment_id")) g.comment_id = field<std::string>(r, "comment_id");
  if (r.contains("method_id")) g.method_id = field<std::string>(r, "method_id");
  if (r.contains("path")) g.path = field<std::string>(r, "path");
  if (r.contains("comment_line")) g.comment_line = field<std::size_t>(r, "comment_line");
  g.categories = field<std::vector<std::string>>(r, "categories");
  for (const json& l : field<json>(r, "links")) {
    if (!l.is_number_integer() || l.get<std::int64_t>() <= 0) {
      throw SchemaError("gold links must be positive integers: " + l.dump());
    }
    g.links.insert(l.get<std::size_t>());
  }
  if (g.comment_id.empty() && (g.path.empty() || g.comment_line == 0)) {
    throw SchemaError("gold record needs comment_id or path + comment_line");
  }
  return g;
}

inline std::vector<GoldLabel> read_gold(const std::filesystem::path& path) {
  JsonlFile f = read_jsonl(path, schema::kGold);
  std::vector<GoldLabel> out;
  for (const json& r : f.records) out.push_back(gold_from_json(r));
  return out;
}

}  // namespace snipdoc

#endif  // SNIPDOC_RECORDS_HPP
