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

// JSON-over-HTTP front end of AnnotationStore. Routes live under /api/v1;
// see README.md.

#ifndef SNIPDOC_ANNOTATION_HTTP_HPP
#define SNIPDOC_ANNOTATION_HTTP_HPP

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>

#include <httplib.h>
#include <json.hpp>

#include "snipdoc/annotation.hpp"

namespace snipdoc {

/// Static bearer tokens: {"annotators": [{"id": "...", "token": "..."}]}.
struct ServiceConfig {
  std::map<std::string, std::string> annotator_by_token;

  static ServiceConfig from_json(const json& j) {
    ServiceConfig c;
    for (const json& a : field<json>(j, "annotators")) {
      const auto id = field<std::string>(a, "id");
      const auto token = field<std::string>(a, "token");
      if (id.empty() || token.empty()) throw SchemaError("empty annotator id or token");
      if (!c.annotator_by_token.emplace(token, id).second) {
        throw SchemaError("duplicate annotator token");
      }
    }
    return c;
  }

  static ServiceConfig load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open service config " + path.string());
    try {
      return from_json(json::parse(in));
    } catch (const json::parse_error& e) {
      throw SchemaError("service config: " + std::string(e.what()));
    }
  }

  std::vector<std::string> annotators() const {
    std::set<std::string> ids;
    for (const auto& [token, id] : annotator_by_token) ids.insert(id);
    return {ids.begin(), ids.end()};
  }
};

namespace detail {

inline void send_json(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

inline void send_error(httplib::Response& res, int status, std::string_view message) {
  send_json(res, status, json{{"error", message}});
}

inline std::optional<std::string> authenticate(const ServiceConfig& config,
                                               const httplib::Request& req) {
  const std::string header = req.get_header_value("Authorization");
  constexpr std::string_view kBearer = "Bearer ";
  if (!header.starts_with(kBearer)) return std::nullopt;
  auto it = config.annotator_by_token.find(header.substr(kBearer.size()));
  if (it == config.annotator_by_token.end()) return std::nullopt;
  return it->second;
}

struct LabelBody {
  std::set<std::string> categories;
  LinkSet links;
};

inline LabelBody parse_label_body(const std::string& body) {
  json j;
  try {
    j = json::parse(body);
  } catch (const json::parse_error&) {
    throw ValidationError("request body is not JSON");
  }
  if (!j.is_object()) throw ValidationError("request body must be an object");
  LabelBody b;
  try {
    b.categories = j.at("categories").get<std::set<std::string>>();
    const json& links = j.at("links");
    if (!links.is_array()) throw ValidationError("links must be an array");
    for (const json& l : links) {
      if (!l.is_number_unsigned()) {
        throw ValidationError("links must be positive integers");
      }
      b.links.insert(l.get<std::size_t>());
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed label: ") + e.what());
  }
  return b;
}

inline json task_view_json(const AnnotationTask& t, const std::optional<MethodView>& view,
                           const std::string& viewer) {
  json j{{"task_id", t.task_id},
         {"path", t.path},
         {"method_id", t.method_id},
         {"comment_id", t.comment_id},
         {"comment_text", t.comment_text},
         {"comment_line", t.comment_line},
         {"comment_start_line", t.start_line},
         {"comment_end_line", t.end_line},
         {"status", to_string(t.status)},
         {"assignees", t.assignees}};
  json lines = json::array();
  if (view) {
    for (std::size_t i = 0; i < view->lines.size(); ++i) {
      lines.push_back({{"number", i + 1},
                       {"file_line", view->file_line + i},
                       {"text", view->lines[i]},
                       {"linkable", static_cast<bool>(view->linkable[i])}});
    }
  }
  j["lines"] = std::move(lines);
  for (const LabelRecord& r : t.labels) {
    if (r.annotator_id == viewer) j["own_label"] = label_to_json(r);
  }
  // Third parties see both labels once the task is in adjudication.
  if (!t.assigned_to(viewer) &&
      (t.status == TaskStatus::conflicted || t.status == TaskStatus::resolved)) {
    json labels = json::array();
    for (const LabelRecord& r : t.labels) labels.push_back(label_to_json(r));
    j["labels"] = std::move(labels);
    j["conflict"] = t.conflict ? json(to_string(*t.conflict)) : json(nullptr);
  }
  return j;
}

inline json task_summary_json(const AnnotationTask& t) {
  return json{{"task_id", t.task_id},
              {"path", t.path},
              {"comment_line", t.comment_line},
              {"status", to_string(t.status)}};
}

}  // namespace detail

/// Registers the /api/v1 routes on `server`. The store must outlive it.
inline void install_routes(httplib::Server& server, AnnotationStore& store,
                           const ServiceConfig& config) {
  using httplib::Request;
  using httplib::Response;
  using Handler = std::function<void(const Request&, Response&, const std::string&)>;

  // Authenticates, then maps store errors onto HTTP statuses.
  auto guarded = [&config](Handler h) {
    return [&config, h = std::move(h)](const Request& req, Response& res) {
      const auto who = detail::authenticate(config, req);
      if (!who) {
        detail::send_error(res, 401, "missing or invalid bearer token");
        return;
      }
      try {
        h(req, res, *who);
      } catch (const NotFoundError& e) {
        detail::send_error(res, 404, e.what());
      } catch (const AuthorizationError& e) {
        detail::send_error(res, 403, e.what());
      } catch (const WriteConflictError& e) {
        detail::send_error(res, 409, e.what());
      } catch (const ValidationError& e) {
        detail::send_error(res, 400, e.what());
      } catch (const std::exception& e) {
        detail::send_error(res, 500, e.what());
      }
    };
  };

  server.Get("/api/v1/assignments",
             guarded([&store](const Request&, Response& res, const std::string& who) {
               json list = json::array();
               for (const AnnotationTask& t : store.assignments(who)) {
                 list.push_back(detail::task_summary_json(t));
               }
               detail::send_json(res, 200, json{{"annotator", who}, {"tasks", list}});
             }));

  server.Get("/api/v1/assignments/next",
             guarded([&store](const Request&, Response& res, const std::string& who) {
               const auto pending = store.assignments(who);
               if (pending.empty()) {
                 detail::send_json(res, 200, json{{"task", nullptr}});
                 return;
               }
               const AnnotationTask& t = pending.front();
               detail::send_json(
                   res, 200,
                   json{{"task", detail::task_view_json(t, store.method(t.method_id), who)}});
             }));

  server.Get(R"(/api/v1/tasks/([A-Za-z0-9_.:-]+))",
             guarded([&store](const Request& req, Response& res, const std::string& who) {
               const std::string id = req.matches[1];
               const auto t = store.task(id);
               if (!t) throw NotFoundError("no such task: " + id);
               detail::send_json(res, 200,
                                 detail::task_view_json(*t, store.method(t->method_id), who));
             }));

  server.Post(R"(/api/v1/tasks/([A-Za-z0-9_.:-]+)/labels)",
              guarded([&store](const Request& req, Response& res, const std::string& who) {
                const std::string id = req.matches[1];
                detail::LabelBody b = detail::parse_label_body(req.body);
                const TaskStatus s = store.submit_label(id, who, std::move(b.categories),
                                                        std::move(b.links));
                const auto t = store.task(id);
                detail::send_json(
                    res, 201,
                    json{{"task_id", id},
                         {"status", to_string(s)},
                         {"conflict", t && t->conflict ? json(to_string(*t->conflict))
                                                       : json(nullptr)}});
              }));

  server.Get("/api/v1/conflicts",
             guarded([&store](const Request&, Response& res, const std::string& who) {
               json list = json::array();
               for (const AnnotationTask& t : store.open_conflicts(who)) {
                 json labels = json::array();
                 for (const LabelRecord& r : t.labels) labels.push_back(label_to_json(r));
                 list.push_back({{"task_id", t.task_id},
                                 {"path", t.path},
                                 {"comment_text", t.comment_text},
                                 {"kind", to_string(*t.conflict)},
                                 {"labels", std::move(labels)}});
               }
               detail::send_json(res, 200, json{{"conflicts", list}});
             }));

  server.Post(R"(/api/v1/conflicts/([A-Za-z0-9_.:-]+)/resolution)",
              guarded([&store](const Request& req, Response& res, const std::string& who) {
                const std::string id = req.matches[1];
                detail::LabelBody b = detail::parse_label_body(req.body);
                const AnnotationTask t =
                    store.resolve(id, who, std::move(b.categories), std::move(b.links));
                detail::send_json(res, 200,
                                  json{{"task_id", id},
                                       {"status", to_string(t.status)},
                                       {"resolution", label_to_json(*t.resolution)}});
              }));

  server.Get("/api/v1/categories",
             guarded([&store](const Request&, Response& res, const std::string&) {
               detail::send_json(res, 200, json{{"categories", store.categories()}});
             }));

  server.Post("/api/v1/categories",
              guarded([&store](const Request& req, Response& res, const std::string&) {
                json j;
                try {
                  j = json::parse(req.body);
                } catch (const json::parse_error&) {
                  throw ValidationError("request body is not JSON");
                }
                if (!j.is_object() || !j.contains("name") || !j["name"].is_string()) {
                  throw ValidationError("expected {\"name\": string}");
                }
                const std::string name = store.add_category(j["name"].get<std::string>());
                detail::send_json(res, 201, json{{"name", name}});
              }));

  server.Get("/api/v1/export",
             guarded([&store](const Request&, Response& res, const std::string&) {
               const GoldExport g = store.export_gold();
               detail::send_json(res, 200, json{{"header", g.header()}, {"records", g.records}});
             }));

  server.Get("/api/v1/stats",
             guarded([&store](const Request&, Response& res, const std::string&) {
               detail::send_json(res, 200, store.conflict_report().to_json());
             }));
}

}  // namespace snipdoc

#endif  // SNIPDOC_ANNOTATION_HTTP_HPP
