#include "z2ring/result_cache.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "z2ring/classify.hpp"
#include "z2ring/errors.hpp"

namespace z2ring {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string classification_cache_key(std::size_t r) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0')
     << fnv1a64("classify;r=" + std::to_string(r) + ";version=" + kAlgorithmVersion);
  return os.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  const std::filesystem::path dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  std::filesystem::create_directories(dir);
  const std::filesystem::path tmp = dir / ("." + path.filename().string() + ".tmp" + std::to_string(fnv1a64(contents)));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      out.close();
      std::filesystem::remove(tmp);
      throw Error("failed writing " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

std::optional<std::string> ResultCache::load(const std::string& key) const {
  std::ifstream in(entry_path(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void ResultCache::store(const std::string& key, std::string_view contents) const {
  write_file_atomic(entry_path(key), contents);
}

}  // namespace z2ring
