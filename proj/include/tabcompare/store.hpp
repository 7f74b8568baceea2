#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "tabcompare/score.hpp"

namespace tabcompare {

struct StoredScore {
  std::string id;  // sha256 of `bytes`
  std::string filename;
  std::string bytes;
  Score score;
};

struct StoredComparison {
  std::string id;  // sha256 of `document`
  std::string created_at;
  std::vector<std::string> version_names;
  std::string document;  // serialized ComparisonDocument
};

/// Content-addressed in-memory store for uploads and documents, optionally
/// mirrored to a directory (one file per object). Objects never change once
/// stored; reads share a lock, writes take it exclusively.
class Store {
 public:
  explicit Store(std::optional<std::filesystem::path> data_dir = std::nullopt);

  /// Parses and stores an upload; throws ParseError. Storing the same bytes
  /// again returns the existing entry.
  StoredScore put_score(const std::string& filename, std::string bytes);
  std::optional<StoredScore> score(const std::string& id) const;

  StoredComparison put_comparison(std::vector<std::string> version_names, std::string document);
  std::optional<StoredComparison> comparison(const std::string& id) const;
  /// Oldest first; `document` is left empty in the listing.
  std::vector<StoredComparison> list_comparisons() const;

 private:
  void load();
  void persist(const std::string& kind, const std::string& id, const std::string& header,
               const std::string& payload) const;

  std::optional<std::filesystem::path> data_dir_;
  mutable std::shared_mutex mutex_;
  std::map<std::string, StoredScore> scores_;
  std::map<std::string, StoredComparison> comparisons_;
  std::vector<std::string> comparison_order_;
};

/// Current UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

}  // namespace tabcompare
