#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "tabcompare/document.hpp"
#include "tabcompare/store.hpp"

namespace tabcompare {

inline constexpr std::size_t kMaxUploadBytes = 5 * 1024 * 1024;

struct ServiceOptions {
  /// Directory holding the UI bundle (index.html + assets); a placeholder page otherwise.
  std::optional<std::filesystem::path> ui_dir;
  std::size_t max_upload_bytes = kMaxUploadBytes;
};

/// Builds the document for run options whose sources are score ids in the
/// store. Missing names default to the stored file names. Throws ConfigError,
/// or std::out_of_range naming an unknown score id.
ComparisonDocument build_from_store(const Store& store, RunOptions options);

/// HTTP API:
///   POST /api/scores              raw file body, X-Filename header -> {id, tracks}
///   GET  /api/scores/{id}         canonical score
///   POST /api/comparisons         run options -> {id}
///   GET  /api/comparisons/{id}    comparison document
///   GET  /api/comparisons         [{id, createdAt, versionNames}]
///   GET  /                        UI
/// Errors are {"error": message} with status 400, 404, 413 or 500.
class Service {
 public:
  explicit Service(Store& store, ServiceOptions options = {});
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  /// Binds to host:port (port 0 picks a free one). False if the port is unavailable.
  bool bind(const std::string& host, int port);
  int port() const;
  /// Serves until stop() is called. Requires a successful bind().
  void run();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace tabcompare
