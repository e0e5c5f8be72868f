#pragma once

// Append-only on-disk cache of prime-range scans. One JSON object per line,
// keyed by (operation, canonical polynomial text, bound). A process holds an
// exclusive flock on the directory's lock file for the cache's lifetime, so
// it is the sole writer. Every 100th hit is recomputed and compared.

#include <json.hpp>

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>

namespace ramex {

inline std::filesystem::path default_cache_dir() {
  if (const char* d = std::getenv("RAMEX_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "ramex";
  if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "ramex";
  return std::filesystem::temp_directory_path() / "ramex-cache";
}

// FNV-1a; only used to shorten keys, the full text is compared on lookup.
inline std::string canonical_hash(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

class ScanCache {
 public:
  struct Stats {
    std::uint64_t hits = 0, misses = 0, revalidated = 0, mismatches = 0, skipped_lines = 0;
  };

  explicit ScanCache(const std::filesystem::path& dir, std::ostream& log = std::cerr) : dir_(dir), log_(&log) {
    std::filesystem::create_directories(dir_);
    const auto lock_path = dir_ / "lock";
    lock_fd_ = ::open(lock_path.c_str(), O_RDWR | O_CREAT, 0644);
    if (lock_fd_ < 0 || ::flock(lock_fd_, LOCK_EX) != 0)
      throw std::runtime_error("cannot lock cache directory " + dir_.string());
    load();
    out_.open(file(), std::ios::app);
    if (!out_) throw std::runtime_error("cannot open cache file " + file().string());
  }
  ~ScanCache() {
    out_.close();
    if (lock_fd_ >= 0) {
      ::flock(lock_fd_, LOCK_UN);
      ::close(lock_fd_);
    }
  }
  ScanCache(const ScanCache&) = delete;
  ScanCache& operator=(const ScanCache&) = delete;

  std::filesystem::path file() const { return dir_ / "scans.jsonl"; }
  const Stats& stats() const { return stats_; }

  /// Cached value for the key, or compute() stored under it.
  nlohmann::json get_or_compute(const std::string& op, const std::string& poly, std::uint64_t bound,
                                const std::function<nlohmann::json()>& compute) {
    const Key key{op, poly, bound};
    auto it = records_.find(key);
    if (it == records_.end()) {
      ++stats_.misses;
      nlohmann::json v = compute();
      store(key, v);
      return v;
    }
    const bool check = stats_.hits++ % 100 == 0;
    if (!check) return it->second;
    ++stats_.revalidated;
    nlohmann::json v = compute();
    if (v != it->second) {
      ++stats_.mismatches;
      *log_ << "ramex: cache record for " << op << " " << canonical_hash(poly) << " disagrees with recomputation; replaced\n";
      store(key, v);
    }
    return v;
  }

 private:
  using Key = std::tuple<std::string, std::string, std::uint64_t>;

  void load() {
    std::ifstream in(file());
    std::string line;
    std::uint64_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      try {
        const auto j = nlohmann::json::parse(line);
        const std::string poly = j.at("poly").get<std::string>();
        if (j.at("hash").get<std::string>() != canonical_hash(poly)) throw std::runtime_error("hash mismatch");
        records_[Key{j.at("op").get<std::string>(), poly, j.at("bound").get<std::uint64_t>()}] = j.at("value");
      } catch (const std::exception& e) {
        ++stats_.skipped_lines;
        *log_ << "ramex: skipping unreadable cache line " << lineno << " (" << e.what() << ")\n";
      }
    }
  }

  void store(const Key& key, const nlohmann::json& v) {
    records_[key] = v;
    const auto& [op, poly, bound] = key;
    nlohmann::json rec = {{"op", op}, {"poly", poly}, {"hash", canonical_hash(poly)}, {"bound", bound}, {"value", v}};
    out_ << rec.dump() << '\n';
    out_.flush();
  }

  std::filesystem::path dir_;
  std::ostream* log_;
  int lock_fd_ = -1;
  std::ofstream out_;
  std::map<Key, nlohmann::json> records_;
  Stats stats_;
};

}  // namespace ramex
