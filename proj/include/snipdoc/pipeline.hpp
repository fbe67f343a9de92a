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

// File-to-file stages behind the `snipdoc` subcommands. Each stage reads
// and writes the artifacts described in README.md; diagnostics go to
// the log stream, never to data files.

#ifndef SNIPDOC_PIPELINE_HPP
#define SNIPDOC_PIPELINE_HPP

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "snipdoc/encoder.hpp"
#include "snipdoc/extractor.hpp"
#include "snipdoc/forest.hpp"
#include "snipdoc/linkers.hpp"
#include "snipdoc/metrics.hpp"
#include "snipdoc/records.hpp"
#include "snipdoc/retrieval.hpp"
#include "snipdoc/stats.hpp"

namespace snipdoc::pipeline {

namespace fs = std::filesystem;

inline std::ostream*& log_stream() {
  static std::ostream* stream = &std::cerr;
  return stream;
}

inline void log(const std::string& message) {
  if (log_stream()) *log_stream() << "snipdoc: " << message << '\n';
}

inline constexpr std::array<std::string_view, 3> kSplitNames = {"train", "eval", "test"};

inline fs::path dataset_path(const fs::path& dir, Task task, std::string_view split) {
  return dir / (std::string(to_string(task)) + "_" + std::string(split) + ".jsonl");
}

// ---------------------------------------------------------------------------
// mine / extract

inline CorpusManifest run_mine(const fs::path& root, const fs::path& out,
                               const MineConfig& config) {
  CorpusManifest m = mine_corpus(root, config);
  for (const std::string& w : m.warnings) log("skip: " + w);
  write_manifest(out, m);
  std::ostringstream msg;
  msg << "mined " << m.files << " files, kept " << m.methods.size() << " methods";
  for (const auto& [reason, n] : m.skipped) msg << ", " << reason << "=" << n;
  log(msg.str());
  return m;
}

/// Manifest of every method in one file, without corpus filters.
inline CorpusManifest run_extract(const fs::path& input, const std::string& project,
                                  const fs::path& out) {
  std::ifstream in(input, std::ios::binary);
  if (!in) throw Error("cannot open " + input.string());
  SourceFile file;
  file.path = input.filename().generic_string();
  file.project_id = project;
  file.content.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  if (!is_valid_utf8(file.content)) throw Error(input.string() + " is not UTF-8");
  CorpusManifest m;
  m.files = 1;
  m.methods = extract_methods(file);
  write_manifest(out, m);
  log("extracted " + std::to_string(m.methods.size()) + " methods");
  return m;
}

// ---------------------------------------------------------------------------
// encode

struct EncodeOptions {
  fs::path manifest;
  std::optional<fs::path> labels;      // gold file
  std::optional<fs::path> links_from;  // linking predictions for summarization
  fs::path out_dir;
  std::size_t summary_max_tokens = 512;
  SplitSpec split;
};

struct EncodeResult {
  std::map<std::string, std::size_t> counts;  // "<task>_<split>" -> instances
  std::size_t unmatched_labels = 0;
  std::size_t invalid_links = 0;
  std::size_t unparseable_predictions = 0;
  std::size_t duplicates = 0;
};

/// Predicted links of one linking prediction record: an explicit
/// `predicted_links` array, or a model output string `predicted_target`
/// in the `<N>` grammar. nullopt when the string does not parse.
inline std::optional<LinkSet> prediction_links(const json& r) {
  if (r.contains("predicted_links")) {
    LinkSet s;
    for (std::size_t l : field<std::vector<std::size_t>>(r, "predicted_links")) s.insert(l);
    return s;
  }
  return decode_link_target(field<std::string>(r, "predicted_target"));
}

inline EncodeResult run_encode(const EncodeOptions& opt) {
  if (!opt.labels && !opt.links_from) {
    throw Error("encode needs --labels, --links-from, or both");
  }
  const std::vector<ManifestEntry> entries = read_manifest(opt.manifest);
  const ManifestIndex index(entries);
  EncodeResult result;

  std::vector<TaskInstance> classification;
  std::vector<TaskInstance> linking;
  std::vector<TaskInstance> summarization;

  auto add_summary = [&](const ManifestIndex::Ref& ref, const LinkSet& links) {
    if (links.empty() || !is_summary_candidate(ref.comment->text) ||
        !filter_method(*ref.method, opt.summary_max_tokens)) {
      return;
    }
    summarization.push_back(encode_summarization(*ref.method, *ref.comment, links));
  };

  if (opt.labels) {
    for (const GoldLabel& g : read_gold(*opt.labels)) {
      std::optional<ManifestIndex::Ref> ref =
          g.comment_id.empty() ? index.comment_at(g.path, g.comment_line)
                               : index.comment(g.comment_id);
      if (!ref) {
        ++result.unmatched_labels;
        log("label matches no manifest comment: " +
            (g.comment_id.empty() ? g.path + ":" + std::to_string(g.comment_line)
                                  : g.comment_id));
        continue;
      }
      const bool summary = has_category(g, "summary");
      classification.push_back(
          make_classification_instance(*ref->method, *ref->comment, summary));
      if (!summary) continue;
      try {
        linking.push_back(encode_linking(*ref->method, *ref->comment, g.links));
      } catch (const Error& e) {
        ++result.invalid_links;
        log(std::string("dropping label: ") + e.what());
        continue;
      }
      if (!opt.links_from) add_summary(*ref, g.links);
    }
  }
  if (opt.links_from) {
    for (const json& r : read_jsonl(*opt.links_from, schema::kLinkPredictions).records) {
      const auto id = field<std::string>(r, "comment_id");
      const auto ref = index.comment(id);
      if (!ref) throw MismatchError("prediction for a comment not in the manifest", id);
      const std::optional<LinkSet> links = prediction_links(r);
      if (!links) {
        ++result.unparseable_predictions;
        continue;
      }
      try {
        add_summary(*ref, *links);
      } catch (const Error&) {
        ++result.unparseable_predictions;  // lines outside the method
      }
    }
  }
  const std::size_t before = summarization.size();
  summarization = dedup_snippets(std::move(summarization));
  result.duplicates = before - summarization.size();

  // One file-level partition shared by all tasks.
  std::map<std::string, int> partition_of;
  if (opt.split.group_key == GroupKey::file) {
    std::vector<TaskInstance> all;
    for (const auto* v : {&classification, &linking, &summarization}) {
      all.insert(all.end(), v->begin(), v->end());
    }
    const DatasetSplits s = split_dataset(std::move(all), opt.split);
    int p = 0;
    for (const auto* part : {&s.train, &s.eval, &s.test}) {
      for (const TaskInstance& t : *part) partition_of[t.path] = p;
      ++p;
    }
  }

  auto emit = [&](Task task, std::vector<TaskInstance> instances) {
    DatasetSplits s;
    if (opt.split.group_key == GroupKey::file) {
      for (TaskInstance& t : instances) {
        const int p = partition_of.at(t.path);
        (p == 0 ? s.train : p == 1 ? s.eval : s.test).push_back(std::move(t));
      }
    } else if (!instances.empty()) {
      SplitSpec spec = opt.split;
      spec.seed = derive_seed(opt.split.seed, to_string(task));
      s = split_dataset(std::move(instances), spec);
    }
    int p = 0;
    for (const auto* part : {&s.train, &s.eval, &s.test}) {
      write_dataset(dataset_path(opt.out_dir, task, kSplitNames[p]), task,
                    kSplitNames[p], *part);
      result.counts[std::string(to_string(task)) + "_" + std::string(kSplitNames[p])] =
          part->size();
      ++p;
    }
  };
  emit(Task::classification, std::move(classification));
  emit(Task::linking, std::move(linking));
  emit(Task::summarization, std::move(summarization));

  std::ostringstream msg;
  msg << "encoded";
  for (const auto& [name, n] : result.counts) msg << " " << name << "=" << n;
  msg << "; unmatched_labels=" << result.unmatched_labels
      << " invalid_links=" << result.invalid_links
      << " unparseable_predictions=" << result.unparseable_predictions
      << " snippet_duplicates=" << result.duplicates;
  log(msg.str());
  return result;
}

// ---------------------------------------------------------------------------
// link

enum class Engine { blank_line, token_similarity, forest };

inline Engine engine_from_string(std::string_view s) {
  if (s == "blank-line") return Engine::blank_line;
  if (s == "token-similarity") return Engine::token_similarity;
  if (s == "forest") return Engine::forest;
  throw Error("unknown linking engine: " + std::string(s));
}

inline std::string_view to_string(Engine e) {
  switch (e) {
    case Engine::blank_line:
      return "blank-line";
    case Engine::token_similarity:
      return "token-similarity";
    case Engine::forest:
      return "forest";
  }
  return "?";
}

struct LinkOptions {
  fs::path manifest;
  std::optional<fs::path> dataset;  // linking dataset: which comments to link
  Engine engine = Engine::blank_line;
  LinkerConfig config;
  std::optional<fs::path> model;          // trained forest to load
  std::optional<fs::path> train_dataset;  // or train on this linking dataset
  std::optional<fs::path> save_model;
  fs::path out;
};

inline ForestModel load_forest(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open model " + path.string());
  try {
    return forest_from_json(json::parse(in));
  } catch (const json::parse_error& e) {
    throw SchemaError("model " + path.string() + ": " + e.what());
  }
}

inline void save_forest(const ForestModel& model, const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << forest_to_json(model).dump() << '\n';
  if (!out) throw Error("cannot write model " + path.string());
}

/// Training rows from a linking dataset whose targets hold the gold links.
inline std::vector<LabeledFeatures> rows_from_dataset(const ManifestIndex& index,
                                                      const fs::path& dataset) {
  std::vector<LabeledFeatures> rows;
  for (const TaskInstance& t : read_dataset(dataset)) {
    if (t.task != Task::linking) throw SchemaError("training dataset is not a linking set");
    const auto ref = index.comment(t.comment_id);
    if (!ref) throw MismatchError("training instance not in the manifest", t.comment_id);
    const auto gold = decode_link_target(t.target_text);
    if (!gold) throw SchemaError("unparseable gold target for " + t.comment_id);
    const auto r = training_rows(*ref->method, *ref->comment, *gold);
    rows.insert(rows.end(), r.begin(), r.end());
  }
  return rows;
}

inline std::size_t run_link(const LinkOptions& opt) {
  const std::vector<ManifestEntry> entries = read_manifest(opt.manifest);
  const ManifestIndex index(entries);

  std::vector<ManifestIndex::Ref> targets;
  if (opt.dataset) {
    for (const TaskInstance& t : read_dataset(*opt.dataset)) {
      const auto ref = index.comment(t.comment_id);
      if (!ref) throw MismatchError("dataset instance not in the manifest", t.comment_id);
      targets.push_back(*ref);
    }
  } else {
    for (const ManifestEntry& e : entries) {
      for (const InnerComment& c : e.comments) targets.push_back({&e.method, &c});
    }
  }

  std::optional<ForestModel> model;
  json header = make_header(schema::kLinkPredictions);
  header["engine"] = to_string(opt.engine);
  if (opt.engine == Engine::token_similarity) header["lambda"] = opt.config.lambda;
  if (opt.engine == Engine::forest) {
    if (opt.model) {
      model = load_forest(*opt.model);
    } else if (opt.train_dataset) {
      const auto rows = rows_from_dataset(index, *opt.train_dataset);
      log("training forest on " + std::to_string(rows.size()) + " statements");
      model = train_forest(rows, opt.config.forest, derive_seed(opt.config.seed, "forest"));
    } else {
      throw Error("the forest engine needs --model or --train-dataset");
    }
    if (opt.save_model) save_forest(*model, *opt.save_model);
    header["model_seed"] = model->seed;
    header["trees"] = model->trees.size();
  }

  std::vector<json> records;
  for (const ManifestIndex::Ref& ref : targets) {
    LinkSet links;
    switch (opt.engine) {
      case Engine::blank_line:
        links = link_blank_line(*ref.method, *ref.comment);
        break;
      case Engine::token_similarity:
        links = link_token_similarity(*ref.method, *ref.comment, opt.config.lambda);
        break;
      case Engine::forest:
        links = link_forest(*model, *ref.method, *ref.comment);
        break;
    }
    records.push_back(json{{"comment_id", ref.comment->id},
                           {"method_id", ref.method->id},
                           {"predicted_links", links}});
  }
  write_jsonl(opt.out, header, records);
  log("linked " + std::to_string(records.size()) + " comments with " +
      std::string(to_string(opt.engine)));
  return records.size();
}

// ---------------------------------------------------------------------------
// retrieve

inline std::size_t run_retrieve(const std::vector<fs::path>& train,
                                const fs::path& test, const fs::path& out) {
  std::vector<RetrievalPair> pairs;
  for (const fs::path& p : train) {
    for (const TaskInstance& t : read_dataset(p)) {
      if (t.task != Task::summarization) {
        throw SchemaError(p.string() + " is not a summarization dataset");
      }
      pairs.push_back({documented_code(t.input_text), t.target_text, t.comment_id});
    }
  }
  const SnippetIndex index = build_index(pairs);
  std::vector<json> records;
  for (const TaskInstance& t : read_dataset(test)) {
    const RetrievalHit hit = retrieve_summary(documented_code(t.input_text), index);
    records.push_back(json{{"comment_id", t.comment_id},
                           {"method_id", t.method_id},
                           {"predicted_summary", hit.summary},
                           {"score", hit.score},
                           {"source_id", index.entry(hit.entry).id}});
  }
  json header = make_header(schema::kSummaryPredictions);
  header["engine"] = "ir-jaccard";
  header["index_size"] = index.size();
  write_jsonl(out, header, records);
  log("retrieved summaries for " + std::to_string(records.size()) + " snippets");
  return records.size();
}

// ---------------------------------------------------------------------------
// eval

/// Pairs gold instances with predictions by comment id. Every gold
/// instance needs exactly one prediction and vice versa; the first
/// violation (in gold order, then prediction order) is reported.
inline std::vector<const json*> join_predictions(const std::vector<TaskInstance>& gold,
                                                 const std::vector<json>& predictions) {
  std::unordered_map<std::string, const json*> by_id;
  for (const json& p : predictions) {
    const auto id = field<std::string>(p, "comment_id");
    if (!by_id.emplace(id, &p).second) throw MismatchError("duplicate prediction", id);
  }
  std::vector<const json*> out;
  std::unordered_map<std::string, bool> gold_ids;
  for (const TaskInstance& g : gold) {
    if (!gold_ids.emplace(g.comment_id, true).second) {
      throw MismatchError("duplicate gold instance", g.comment_id);
    }
    auto it = by_id.find(g.comment_id);
    if (it == by_id.end()) throw MismatchError("no prediction for gold instance", g.comment_id);
    out.push_back(it->second);
  }
  for (const json& p : predictions) {
    const auto id = field<std::string>(p, "comment_id");
    if (!gold_ids.contains(id)) throw MismatchError("prediction without gold instance", id);
  }
  return out;
}

struct EvalOptions {
  Task task = Task::linking;
  fs::path gold;
  fs::path predictions;
  fs::path out;
  std::string label;  // technique name stored in the report header
};

inline json run_eval(const EvalOptions& opt) {
  const std::vector<TaskInstance> gold = read_dataset(opt.gold);
  for (const TaskInstance& g : gold) {
    if (g.task != opt.task) {
      throw SchemaError("gold instance " + g.comment_id + " is a " +
                        std::string(to_string(g.task)) + " instance");
    }
  }
  const std::string_view kind = opt.task == Task::linking ? schema::kLinkPredictions
                                                          : schema::kSummaryPredictions;
  if (opt.task == Task::classification) throw Error("eval supports linking and summarization");
  const JsonlFile preds = read_jsonl(opt.predictions, kind);
  const std::vector<const json*> joined = join_predictions(gold, preds.records);

  std::vector<json> records;
  json agg = json::object();
  const auto n = static_cast<double>(gold.size());
  if (opt.task == Task::linking) {
    double correct = 0, precision = 0, recall = 0;
    std::size_t unparseable = 0;
    for (std::size_t i = 0; i < gold.size(); ++i) {
      const auto g = decode_link_target(gold[i].target_text);
      if (!g) throw SchemaError("unparseable gold target for " + gold[i].comment_id);
      const std::optional<LinkSet> p = prediction_links(*joined[i]);
      if (!p) ++unparseable;
      const LinkScore s = link_scores(p.value_or(LinkSet{}), *g);
      correct += s.correct ? 1 : 0;
      precision += s.precision;
      recall += s.recall;
      records.push_back(json{{"comment_id", gold[i].comment_id},
                             {"method_id", gold[i].method_id},
                             {"correct", s.correct},
                             {"tp", s.tp},
                             {"fp", s.fp},
                             {"fn", s.fn},
                             {"precision", s.precision},
                             {"recall", s.recall},
                             {"unparseable", !p}});
    }
    if (n > 0) {
      agg = {{"correct", correct / n},
             {"precision", precision / n},
             {"recall", recall / n},
             {"unparseable", unparseable}};
    }
  } else {
    std::array<double, 4> bleu_sum{};
    double meteor_sum = 0, rp = 0, rr = 0, rf = 0;
    std::vector<Tokens> cands;
    std::vector<Tokens> refs;
    for (std::size_t i = 0; i < gold.size(); ++i) {
      Tokens cand = split_whitespace(field<std::string>(*joined[i], "predicted_summary"));
      Tokens ref = split_whitespace(gold[i].target_text);
      const SummaryScore s = summary_scores(cand, ref);
      json r{{"comment_id", gold[i].comment_id}, {"method_id", gold[i].method_id}};
      for (std::size_t k = 0; k < 4; ++k) {
        r["bleu" + std::to_string(k + 1)] = s.bleu[k];
        bleu_sum[k] += s.bleu[k];
      }
      r["meteor"] = s.meteor;
      r["rouge_precision"] = s.rouge.precision;
      r["rouge_recall"] = s.rouge.recall;
      r["rouge_f"] = s.rouge.fmeasure;
      meteor_sum += s.meteor;
      rp += s.rouge.precision;
      rr += s.rouge.recall;
      rf += s.rouge.fmeasure;
      records.push_back(std::move(r));
      cands.push_back(std::move(cand));
      refs.push_back(std::move(ref));
    }
    if (n > 0) {
      for (std::size_t k = 0; k < 4; ++k) {
        agg["bleu" + std::to_string(k + 1)] = bleu_sum[k] / n;
        BleuOptions o;
        o.max_n = k + 1;
        agg["corpus_bleu" + std::to_string(k + 1)] = corpus_bleu(cands, refs, o);
      }
      agg["meteor"] = meteor_sum / n;
      agg["rouge_precision"] = rp / n;
      agg["rouge_recall"] = rr / n;
      agg["rouge_f"] = rf / n;
    }
  }
  json header = make_header(schema::kReport);
  header["task"] = to_string(opt.task);
  header["label"] = opt.label;
  header["instances"] = gold.size();
  header["aggregates"] = agg;
  write_jsonl(opt.out, header, records);
  log("evaluated " + std::to_string(gold.size()) + " " + std::string(to_string(opt.task)) +
      " instances: " + agg.dump());
  return header;
}

// ---------------------------------------------------------------------------
// stats

struct StatsRow {
  std::string comparison;  // "<against> vs <reference>"
  std::string metric;
  std::string test;  // wilcoxon | mcnemar
  std::size_t n = 0;
  std::optional<double> statistic;
  std::optional<double> p;
  std::optional<double> p_holm;
  std::optional<double> effect;  // Cliff's d, or paired odds ratio
  std::string effect_label;      // Cliff's label; "-" for the odds ratio
};

inline std::string format_number(std::optional<double> v) {
  if (!v) return "NA";
  if (std::isinf(*v)) return *v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", *v);
  return buf;
}

inline std::string report_label(const JsonlFile& f, const fs::path& path) {
  const std::string label = f.header.value("label", "");
  return label.empty() ? path.stem().string() : label;
}

/// Compares each `against` report with `reference` on the same instances:
/// McNemar + odds ratio on linking correctness, Wilcoxon + Cliff's delta on
/// every continuous per-instance score. p-values are Holm-adjusted over the
/// whole table. Differences are against minus reference.
inline std::vector<StatsRow> compare_reports(const fs::path& reference,
                                             const std::vector<fs::path>& against) {
  const JsonlFile ref = read_jsonl(reference, schema::kReport);
  const auto task = field<std::string>(ref.header, "task");
  std::vector<std::string> metrics;
  if (task == "linking") {
    metrics = {"precision", "recall"};
  } else {
    metrics = {"bleu1", "bleu2", "bleu3", "bleu4", "meteor", "rouge_f"};
  }
  std::unordered_map<std::string, const json*> ref_by_id;
  for (const json& r : ref.records) ref_by_id[field<std::string>(r, "comment_id")] = &r;

  std::vector<StatsRow> rows;
  for (const fs::path& path : against) {
    const JsonlFile other = read_jsonl(path, schema::kReport);
    if (field<std::string>(other.header, "task") != task) {
      throw SchemaError(path.string() + " reports a different task than the reference");
    }
    std::vector<const json*> ref_rows;
    std::unordered_map<std::string, bool> seen;
    for (const json& r : other.records) {
      const auto id = field<std::string>(r, "comment_id");
      auto it = ref_by_id.find(id);
      if (it == ref_by_id.end()) throw MismatchError("instance missing from reference", id);
      if (!seen.emplace(id, true).second) throw MismatchError("duplicate instance", id);
      ref_rows.push_back(it->second);
    }
    for (const json& r : ref.records) {
      const auto id = field<std::string>(r, "comment_id");
      if (!seen.contains(id)) throw MismatchError("instance missing from comparison", id);
    }
    const std::string comparison = report_label(other, path) + " vs " +
                                   report_label(ref, reference);
    const std::size_t n = other.records.size();
    if (task == "linking") {
      std::vector<bool> a;
      std::vector<bool> b;
      for (std::size_t i = 0; i < n; ++i) {
        a.push_back(field<bool>(other.records[i], "correct"));
        b.push_back(field<bool>(*ref_rows[i], "correct"));
      }
      const McNemarResult m = mcnemar(a, b);
      StatsRow row;
      row.comparison = comparison;
      row.metric = "correct";
      row.test = "mcnemar";
      row.n = n;
      row.statistic = m.statistic;
      row.p = m.p_value;
      row.effect = odds_ratio_paired(m.b, m.c).ratio;
      row.effect_label = "-";
      rows.push_back(std::move(row));
    }
    for (const std::string& metric : metrics) {
      std::vector<double> diffs;
      std::vector<double> xa;
      std::vector<double> xb;
      for (std::size_t i = 0; i < n; ++i) {
        xa.push_back(field<double>(other.records[i], metric));
        xb.push_back(field<double>(*ref_rows[i], metric));
        diffs.push_back(xa.back() - xb.back());
      }
      StatsRow row;
      row.comparison = comparison;
      row.metric = metric;
      row.test = "wilcoxon";
      row.n = n;
      if (const auto w = wilcoxon_signed_rank(diffs)) {
        row.statistic = w->w_plus;
        row.p = w->p_value;
      }
      if (n > 0) {
        const CliffsDelta d = cliffs_delta(xa, xb);
        row.effect = d.d;
        row.effect_label = std::string(to_string(d.label));
      } else {
        row.effect_label = "NA";
      }
      rows.push_back(std::move(row));
    }
  }
  std::vector<double> ps;
  for (const StatsRow& r : rows) {
    if (r.p) ps.push_back(*r.p);
  }
  const std::vector<double> adjusted = holm(ps);
  std::size_t k = 0;
  for (StatsRow& r : rows) {
    if (r.p) r.p_holm = adjusted[k++];
  }
  return rows;
}

inline std::string stats_table(const std::vector<StatsRow>& rows) {
  std::ostringstream out;
  out << "# snipdoc.stats v1\n";
  out << "comparison\tmetric\ttest\tn\tstatistic\tp\tp_holm\teffect\teffect_label\n";
  for (const StatsRow& r : rows) {
    out << r.comparison << '\t' << r.metric << '\t' << r.test << '\t' << r.n << '\t'
        << format_number(r.statistic) << '\t' << format_number(r.p) << '\t'
        << format_number(r.p_holm) << '\t' << format_number(r.effect) << '\t'
        << r.effect_label << '\n';
  }
  return out.str();
}

}  // namespace snipdoc::pipeline

#endif  // SNIPDOC_PIPELINE_HPP
