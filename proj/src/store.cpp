#include "tabcompare/store.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <mutex>
#include <sstream>

#include "tabcompare/canonical.hpp"
#include "tabcompare/digest.hpp"
#include "tabcompare/tabtext.hpp"

namespace tabcompare {

namespace fs = std::filesystem;

namespace {

// On disk an object is one file: a single-line JSON header, '\n', then the payload bytes.
bool read_object(const fs::path& file, Json& header, std::string& payload) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string content = buffer.str();
  const auto newline = content.find('\n');
  if (newline == std::string::npos) return false;
  header = Json::parse(content.substr(0, newline), nullptr, false);
  if (header.is_discarded() || !header.is_object()) return false;
  payload = content.substr(newline + 1);
  return true;
}

}  // namespace

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Store::Store(std::optional<fs::path> data_dir) : data_dir_(std::move(data_dir)) {
  if (data_dir_) {
    fs::create_directories(*data_dir_ / "scores");
    fs::create_directories(*data_dir_ / "comparisons");
    load();
  }
}

void Store::load() {
  for (const auto& entry : fs::directory_iterator(*data_dir_ / "scores")) {
    Json header;
    std::string payload;
    const std::string id = entry.path().filename().string();
    if (!entry.is_regular_file() || !read_object(entry.path(), header, payload)) continue;
    if (sha256_hex(payload) != id) continue;
    try {
      StoredScore s{id, header.value("filename", std::string{}), payload, parse_any(payload)};
      scores_.emplace(id, std::move(s));
    } catch (const std::exception&) {
      continue;
    }
  }
  std::vector<StoredComparison> loaded;
  for (const auto& entry : fs::directory_iterator(*data_dir_ / "comparisons")) {
    Json header;
    std::string payload;
    const std::string id = entry.path().filename().string();
    if (!entry.is_regular_file() || !read_object(entry.path(), header, payload)) continue;
    if (sha256_hex(payload) != id) continue;
    StoredComparison c;
    c.id = id;
    c.created_at = header.value("createdAt", std::string{});
    c.version_names = header.value("versionNames", std::vector<std::string>{});
    c.document = std::move(payload);
    loaded.push_back(std::move(c));
  }
  std::sort(loaded.begin(), loaded.end(), [](const auto& a, const auto& b) {
    return std::tie(a.created_at, a.id) < std::tie(b.created_at, b.id);
  });
  for (auto& c : loaded) {
    comparison_order_.push_back(c.id);
    comparisons_.emplace(c.id, std::move(c));
  }
}

void Store::persist(const std::string& kind, const std::string& id, const std::string& header,
                    const std::string& payload) const {
  if (!data_dir_) return;
  const fs::path final_path = *data_dir_ / kind / id;
  const fs::path tmp_path = *data_dir_ / kind / (id + ".tmp");
  {
    std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
    out << header << '\n' << payload;
    if (!out) throw std::runtime_error("cannot write " + tmp_path.string());
  }
  fs::rename(tmp_path, final_path);
}

StoredScore Store::put_score(const std::string& filename, std::string bytes) {
  const std::string id = sha256_hex(bytes);
  {
    std::shared_lock lock(mutex_);
    if (auto it = scores_.find(id); it != scores_.end()) return it->second;
  }
  Score score = parse_any(bytes);  // throws ParseError
  std::unique_lock lock(mutex_);
  if (auto it = scores_.find(id); it != scores_.end()) return it->second;
  Json header;
  header["filename"] = filename;
  persist("scores", id, header.dump(-1, ' ', false, Json::error_handler_t::replace), bytes);
  StoredScore stored{id, filename, std::move(bytes), std::move(score)};
  scores_.emplace(id, stored);
  return stored;
}

std::optional<StoredScore> Store::score(const std::string& id) const {
  std::shared_lock lock(mutex_);
  if (auto it = scores_.find(id); it != scores_.end()) return it->second;
  return std::nullopt;
}

StoredComparison Store::put_comparison(std::vector<std::string> version_names, std::string document) {
  const std::string id = sha256_hex(document);
  std::unique_lock lock(mutex_);
  if (auto it = comparisons_.find(id); it != comparisons_.end()) return it->second;
  StoredComparison c{id, utc_timestamp(), std::move(version_names), std::move(document)};
  Json header;
  header["createdAt"] = c.created_at;
  header["versionNames"] = c.version_names;
  persist("comparisons", id, header.dump(-1, ' ', false, Json::error_handler_t::replace), c.document);
  comparison_order_.push_back(id);
  comparisons_.emplace(id, c);
  return c;
}

std::optional<StoredComparison> Store::comparison(const std::string& id) const {
  std::shared_lock lock(mutex_);
  if (auto it = comparisons_.find(id); it != comparisons_.end()) return it->second;
  return std::nullopt;
}

std::vector<StoredComparison> Store::list_comparisons() const {
  std::shared_lock lock(mutex_);
  std::vector<StoredComparison> out;
  for (const std::string& id : comparison_order_) {
    StoredComparison c = comparisons_.at(id);
    c.document.clear();
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace tabcompare
