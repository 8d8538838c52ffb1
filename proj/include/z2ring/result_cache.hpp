#pragma once

// Content-addressed storage for classification results, plus the atomic
// file write shared by every command that produces a file.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace z2ring {

std::uint64_t fnv1a64(std::string_view data);

/// Hex digest of (r, algorithm version).
std::string classification_cache_key(std::size_t r);

/// Writes to a sibling temp file, then renames over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path entry_path(const std::string& key) const { return dir_ / (key + ".json"); }
  std::optional<std::string> load(const std::string& key) const;
  void store(const std::string& key, std::string_view contents) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace z2ring
