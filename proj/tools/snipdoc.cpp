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

// snipdoc: mine, link, encode, retrieve, evaluate, compare, serve.
// Exit status: 0 ok, 1 error, 2 usage, 3 schema or id mismatch.

#include <csignal>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "snipdoc/annotation.hpp"
#include "snipdoc/annotation_http.hpp"
#include "snipdoc/pipeline.hpp"

namespace {

namespace fs = std::filesystem;
namespace pl = snipdoc::pipeline;

constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSchema = 3;

template <typename T>
std::optional<T> opt_if(bool set, const T& value) {
  return set ? std::optional<T>(value) : std::nullopt;
}

int serve(const fs::path& config_path, const fs::path& store_dir,
          const std::string& manifest, std::size_t cap, std::uint64_t seed,
          const std::string& host, int port, const std::string& export_to) {
  const snipdoc::ServiceConfig config = snipdoc::ServiceConfig::load(config_path);
  snipdoc::AnnotationStore store(store_dir);
  if (!manifest.empty()) {
    if (store.size() == 0) {
      const auto batch = snipdoc::create_batch(snipdoc::read_manifest(manifest),
                                               config.annotators(), cap,
                                               snipdoc::derive_seed(seed, "batch"));
      store.add_batch(batch);
      pl::log("created " + std::to_string(batch.tasks.size()) + " annotation tasks");
    } else {
      pl::log("store already holds tasks; --manifest ignored");
    }
  }
  if (!export_to.empty()) {
    const snipdoc::GoldExport g = store.export_gold();
    snipdoc::write_jsonl(export_to, g.header(), g.records);
    pl::log("exported " + std::to_string(g.records.size()) + " gold records");
    return 0;
  }

  // SIGINT/SIGTERM are taken synchronously by a watcher thread.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  httplib::Server server;
  snipdoc::install_routes(server, store, config);
  int bound = port;
  if (port == 0) {
    bound = server.bind_to_any_port(host);
  } else if (!server.bind_to_port(host, port)) {
    bound = -1;
  }
  if (bound < 0) throw snipdoc::Error("cannot bind " + host + ":" + std::to_string(port));
  pl::log("listening on " + host + ":" + std::to_string(bound));
  std::jthread watcher([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    server.stop();
  });
  server.listen_after_bind();
  store.snapshot();
  pthread_kill(watcher.native_handle(), SIGTERM);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inner-comment mining, linking, dataset encoding and evaluation"};
  app.require_subcommand(1);
  std::uint64_t seed = 42;
  bool quiet = false;
  app.add_option("--seed", seed, "Master seed for every stochastic step");
  app.add_flag("-q,--quiet", quiet, "Suppress log messages");

  // mine
  auto* mine = app.add_subcommand("mine", "Mine a corpus directory into a manifest");
  std::string mine_root;
  std::string mine_out;
  std::size_t max_tokens = 1024;
  bool keep_tests = false;
  unsigned threads = 0;
  mine->add_option("--root", mine_root, "Corpus root (one subdirectory per project)")
      ->envname("SNIPDOC_CORPUS_ROOT")
      ->required();
  mine->add_option("-o,--out", mine_out, "Manifest file")->required();
  mine->add_option("--max-tokens", max_tokens, "Method token cap")
      ->check(CLI::PositiveNumber);
  mine->add_flag("--keep-tests", keep_tests, "Keep @Test methods");
  mine->add_option("--threads", threads, "Worker threads (0 = all cores)");

  // extract
  auto* extract = app.add_subcommand("extract", "Extract methods and comments of one file");
  std::string extract_in;
  std::string extract_out;
  std::string project;
  extract->add_option("input", extract_in, "Java source file")->required();
  extract->add_option("-o,--out", extract_out, "Manifest file")->required();
  extract->add_option("--project", project, "Project id recorded for the methods");

  // link
  auto* link = app.add_subcommand("link", "Predict documented lines for comments");
  pl::LinkOptions lo;
  std::string link_manifest, link_dataset, link_engine = "blank-line", link_model,
      link_train, link_save, link_out;
  link->add_option("--manifest", link_manifest, "Manifest file")->required();
  link->add_option("--dataset", link_dataset, "Link only the comments of this dataset");
  link->add_option("--engine", link_engine, "blank-line | token-similarity | forest")
      ->check(CLI::IsMember({"blank-line", "token-similarity", "forest"}));
  link->add_option("--lambda", lo.config.lambda, "Token-similarity threshold")
      ->check(CLI::Range(0.0, 1.0));
  link->add_option("--model", link_model, "Trained forest model");
  link->add_option("--train-dataset", link_train, "Linking dataset to train the forest on");
  link->add_option("--save-model", link_save, "Write the trained forest here");
  link->add_option("--trees", lo.config.forest.n_trees, "Forest size")
      ->check(CLI::PositiveNumber);
  link->add_option("--max-depth", lo.config.forest.max_depth, "Tree depth limit");
  link->add_option("--min-split", lo.config.forest.min_split, "Minimum node size to split");
  link->add_option("-o,--out", link_out, "Prediction file")->required();

  // encode
  auto* encode = app.add_subcommand("encode", "Build classification/linking/summarization sets");
  pl::EncodeOptions eo;
  std::string enc_manifest, enc_labels, enc_links, enc_out, group = "file";
  double train = 0.8, eval_ratio = 0.1, test = 0.1;
  encode->add_option("--manifest", enc_manifest, "Manifest file")->required();
  encode->add_option("--labels", enc_labels, "Gold labels");
  encode->add_option("--links-from", enc_links,
                     "Linking predictions to build summarization instances from");
  encode->add_option("--out-dir", enc_out, "Output directory")
      ->envname("SNIPDOC_OUTPUT_DIR")
      ->required();
  encode->add_option("--summary-max-tokens", eo.summary_max_tokens,
                     "Method token cap for summarization")
      ->check(CLI::PositiveNumber);
  encode->add_option("--train", train, "Train ratio");
  encode->add_option("--eval", eval_ratio, "Eval ratio");
  encode->add_option("--test", test, "Test ratio");
  encode->add_option("--group", group, "Split grouping: file | none")
      ->check(CLI::IsMember({"file", "none"}));

  // retrieve
  auto* retrieve = app.add_subcommand("retrieve", "IR-Jaccard summaries for a test set");
  std::vector<std::string> ret_train;
  std::string ret_test, ret_out;
  retrieve->add_option("--train", ret_train, "Summarization training set(s)")->required();
  retrieve->add_option("--test", ret_test, "Summarization test set")->required();
  retrieve->add_option("-o,--out", ret_out, "Prediction file")->required();

  // eval
  auto* eval = app.add_subcommand("eval", "Score predictions against a gold dataset");
  std::string ev_task = "linking", ev_gold, ev_pred, ev_out, ev_label;
  eval->add_option("--task", ev_task, "linking | summarization")
      ->check(CLI::IsMember({"linking", "summarization"}));
  eval->add_option("--gold", ev_gold, "Gold dataset")->required();
  eval->add_option("--predictions", ev_pred, "Prediction file")->required();
  eval->add_option("-o,--out", ev_out, "Report file")->required();
  eval->add_option("--label", ev_label, "Technique name for the report");

  // stats
  auto* stats = app.add_subcommand("stats", "Compare per-instance reports");
  std::string st_ref, st_out;
  std::vector<std::string> st_against;
  stats->add_option("--reference", st_ref, "Baseline report")->required();
  stats->add_option("--against", st_against, "Report(s) compared with the baseline")
      ->required();
  stats->add_option("-o,--out", st_out, "TSV table")->required();

  // serve
  auto* srv = app.add_subcommand("serve", "Run the annotation service");
  std::string sv_config, sv_store, sv_manifest, sv_host = "127.0.0.1", sv_export;
  int sv_port = 8080;
  std::size_t sv_cap = 10;
  srv->add_option("--config", sv_config, "Annotator token file")
      ->envname("SNIPDOC_SERVICE_CONFIG")
      ->required();
  srv->add_option("--store", sv_store, "Store directory")
      ->envname("SNIPDOC_STORE_DIR")
      ->required();
  srv->add_option("--manifest", sv_manifest, "Create tasks from this manifest if empty");
  srv->add_option("--per-file-cap", sv_cap, "Comments sampled per file")
      ->check(CLI::PositiveNumber);
  srv->add_option("--host", sv_host, "Bind address");
  srv->add_option("--port", sv_port, "Port (0 = any free port)")->check(CLI::Range(0, 65535));
  srv->add_option("--export", sv_export, "Write the gold export here and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (quiet) pl::log_stream() = nullptr;

  try {
    if (*mine) {
      snipdoc::MineConfig mc;
      mc.max_tokens = max_tokens;
      mc.skip_tests = !keep_tests;
      mc.threads = threads;
      pl::run_mine(mine_root, mine_out, mc);
    } else if (*extract) {
      pl::run_extract(extract_in, project, extract_out);
    } else if (*link) {
      lo.manifest = link_manifest;
      lo.dataset = opt_if(!link_dataset.empty(), fs::path(link_dataset));
      lo.engine = pl::engine_from_string(link_engine);
      lo.model = opt_if(!link_model.empty(), fs::path(link_model));
      lo.train_dataset = opt_if(!link_train.empty(), fs::path(link_train));
      lo.save_model = opt_if(!link_save.empty(), fs::path(link_save));
      lo.config.seed = seed;
      lo.config.forest.validate();
      lo.out = link_out;
      pl::run_link(lo);
    } else if (*encode) {
      eo.manifest = enc_manifest;
      eo.labels = opt_if(!enc_labels.empty(), fs::path(enc_labels));
      eo.links_from = opt_if(!enc_links.empty(), fs::path(enc_links));
      eo.out_dir = enc_out;
      eo.split.train = train;
      eo.split.eval = eval_ratio;
      eo.split.test = test;
      eo.split.group_key = group == "file" ? snipdoc::GroupKey::file : snipdoc::GroupKey::none;
      eo.split.seed = snipdoc::derive_seed(seed, "split");
      pl::run_encode(eo);
    } else if (*retrieve) {
      pl::run_retrieve(std::vector<fs::path>(ret_train.begin(), ret_train.end()), ret_test,
                       ret_out);
    } else if (*eval) {
      pl::EvalOptions opt;
      opt.task = snipdoc::task_from_string(ev_task);
      opt.gold = ev_gold;
      opt.predictions = ev_pred;
      opt.out = ev_out;
      opt.label = ev_label.empty() ? fs::path(ev_pred).stem().string() : ev_label;
      pl::run_eval(opt);
    } else if (*stats) {
      const auto rows = pl::compare_reports(
          st_ref, std::vector<fs::path>(st_against.begin(), st_against.end()));
      std::ofstream out(st_out, std::ios::binary | std::ios::trunc);
      out << pl::stats_table(rows);
      if (!out) throw snipdoc::Error("cannot write " + st_out);
      pl::log("wrote " + std::to_string(rows.size()) + " comparisons");
    } else if (*srv) {
      return serve(sv_config, sv_store, sv_manifest, sv_cap, seed, sv_host, sv_port,
                   sv_export);
    }
  } catch (const snipdoc::MismatchError& e) {
    std::cerr << "snipdoc: error: " << e.what() << '\n';
    return kExitSchema;
  } catch (const snipdoc::SchemaError& e) {
    std::cerr << "snipdoc: error: " << e.what() << '\n';
    return kExitSchema;
  } catch (const std::exception& e) {
    std::cerr << "snipdoc: error: " << e.what() << '\n';
    return kExitError;
  }
  return 0;
}
