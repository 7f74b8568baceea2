#include "tabcompare/server.hpp"

#include <atomic>
#include <fstream>
#include <regex>
#include <sstream>

#include <httplib.h>

#include "tabcompare/canonical.hpp"
#include "tabcompare/tabtext.hpp"

namespace tabcompare {

namespace {

constexpr const char* kJson = "application/json";

constexpr const char* kPlaceholderPage = R"(<!doctype html>
<html>
<head><meta charset="utf-8"><title>tabcompare</title></head>
<body>
<h1>tabcompare</h1>
<p>No UI bundle is installed. Start the server with <code>--ui-dir</code> to serve one.</p>
<ul>
<li><code>POST /api/scores</code> (raw file body, <code>X-Filename</code> header)</li>
<li><code>GET /api/scores/{id}</code></li>
<li><code>POST /api/comparisons</code></li>
<li><code>GET /api/comparisons</code>, <code>GET /api/comparisons/{id}</code></li>
</ul>
</body>
</html>
)";

std::string dump(const Json& j) { return j.dump(-1, ' ', false, Json::error_handler_t::replace); }

void send_error(httplib::Response& res, int status, const std::string& message) {
  Json body;
  body["error"] = message;
  res.status = status;
  res.set_content(dump(body), kJson);
}

bool is_utf8_string(const std::string& s) {
  try {
    (void)Json(s).dump();
    return true;
  } catch (const nlohmann::json::type_error&) {
    return false;
  }
}

Json tracks_json(const Score& score) {
  Json tracks = Json::array();
  for (const TrackSummary& t : summarize_tracks(score)) {
    Json entry;
    entry["index"] = t.index;
    entry["name"] = t.name;
    entry["strings"] = t.num_strings;
    entry["bars"] = t.num_bars;
    tracks.push_back(std::move(entry));
  }
  return tracks;
}

}  // namespace

ComparisonDocument build_from_store(const Store& store, RunOptions options) {
  std::vector<Score> scores;
  for (VersionSource& v : options.versions) {
    auto stored = store.score(v.source);
    if (!stored) throw std::out_of_range("unknown score id " + v.source);
    if (v.name.empty()) v.name = stored->filename;
    scores.push_back(std::move(stored->score));
  }
  return build_document(scores, options);
}

struct Service::Impl {
  Store& store;
  ServiceOptions options;
  httplib::Server http;
  int port = -1;

  Impl(Store& s, ServiceOptions o) : store(s), options(std::move(o)) { routes(); }

  void routes() {
    // Bodies up to a little over the upload cap are read so oversized uploads get a JSON 413.
    http.set_payload_max_length(options.max_upload_bytes + 1024 * 1024);

    http.set_error_handler([](const httplib::Request&, httplib::Response& res) {
      if (!res.body.empty()) return httplib::Server::HandlerResponse::Unhandled;
      send_error(res, res.status, httplib::status_message(res.status));
      return httplib::Server::HandlerResponse::Handled;
    });
    http.set_exception_handler([](const httplib::Request&, httplib::Response& res,
                                  std::exception_ptr ep) {
      std::string message = "internal error";
      try {
        std::rethrow_exception(ep);
      } catch (const std::exception& e) {
        message += std::string(": ") + e.what();
      } catch (...) {
      }
      send_error(res, 500, message);
    });

    http.Post("/api/scores", [this](const httplib::Request& req, httplib::Response& res) {
      if (req.body.size() > options.max_upload_bytes) {
        send_error(res, 413, "upload exceeds " + std::to_string(options.max_upload_bytes) + " bytes");
        return;
      }
      std::string filename = req.get_header_value("X-Filename");
      if (filename.empty()) filename = "upload";
      if (!is_utf8_string(filename)) {
        send_error(res, 400, "X-Filename is not valid UTF-8");
        return;
      }
      try {
        const StoredScore stored = store.put_score(filename, req.body);
        Json body;
        body["id"] = stored.id;
        body["tracks"] = tracks_json(stored.score);
        res.status = 201;
        res.set_content(dump(body), kJson);
      } catch (const ParseError& e) {
        Json body;
        body["error"] = e.what();
        body["line"] = e.line();
        body["column"] = e.column();
        res.status = 400;
        res.set_content(dump(body), kJson);
      }
    });

    http.Get(R"(/api/scores/([0-9a-f]+))", [this](const httplib::Request& req, httplib::Response& res) {
      const auto stored = store.score(req.matches[1]);
      if (!stored) {
        send_error(res, 404, "unknown score id " + std::string(req.matches[1]));
        return;
      }
      res.set_content(write_canonical(stored->score), kJson);
    });

    http.Post("/api/comparisons", [this](const httplib::Request& req, httplib::Response& res) {
      RunOptions run;
      try {
        run = options_from_json(Json::parse(req.body));
      } catch (const nlohmann::json::exception& e) {
        send_error(res, 400, std::string("invalid JSON body: ") + e.what());
        return;
      } catch (const ParseError& e) {
        send_error(res, 400, e.what());
        return;
      }
      try {
        const ComparisonDocument doc = build_from_store(store, std::move(run));
        std::vector<std::string> names;
        for (const VersionInfo& v : doc.versions) names.push_back(v.name);
        const StoredComparison stored = store.put_comparison(std::move(names), write_document(doc));
        Json body;
        body["id"] = stored.id;
        res.status = 201;
        res.set_content(dump(body), kJson);
      } catch (const std::out_of_range& e) {
        send_error(res, 404, e.what());
      } catch (const ConfigError& e) {
        send_error(res, 400, e.what());
      }
    });

    http.Get(R"(/api/comparisons/([0-9a-f]+))", [this](const httplib::Request& req, httplib::Response& res) {
      const auto stored = store.comparison(req.matches[1]);
      if (!stored) {
        send_error(res, 404, "unknown comparison id " + std::string(req.matches[1]));
        return;
      }
      res.set_content(stored->document, kJson);
    });

    http.Get("/api/comparisons", [this](const httplib::Request&, httplib::Response& res) {
      Json list = Json::array();
      for (const StoredComparison& c : store.list_comparisons()) {
        Json entry;
        entry["id"] = c.id;
        entry["createdAt"] = c.created_at;
        entry["versionNames"] = c.version_names;
        list.push_back(std::move(entry));
      }
      res.set_content(dump(list), kJson);
    });

    // Anything else under /api/ is a JSON 404, never the UI.
    http.Get(R"(/api/.*)", [](const httplib::Request& req, httplib::Response& res) {
      send_error(res, 404, "no such resource " + req.path);
    });

    if (options.ui_dir && std::filesystem::is_directory(*options.ui_dir)) {
      http.set_mount_point("/", options.ui_dir->string());
    } else {
      http.Get("/", [](const httplib::Request&, httplib::Response& res) {
        res.set_content(kPlaceholderPage, "text/html; charset=utf-8");
      });
    }
  }
};

Service::Service(Store& store, ServiceOptions options)
    : impl_(std::make_unique<Impl>(store, std::move(options))) {}

Service::~Service() { stop(); }

bool Service::bind(const std::string& host, int port) {
  if (port == 0) {
    impl_->port = impl_->http.bind_to_any_port(host);
    return impl_->port > 0;
  }
  if (!impl_->http.bind_to_port(host, port)) return false;
  impl_->port = port;
  return true;
}

int Service::port() const { return impl_->port; }

void Service::run() { impl_->http.listen_after_bind(); }

void Service::stop() {
  if (impl_) impl_->http.stop();
}

void Service::wait_until_ready() const { impl_->http.wait_until_ready(); }

}  // namespace tabcompare
