#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "z2ring/classify.hpp"
#include "z2ring/errors.hpp"
#include "z2ring/result_cache.hpp"
#include "z2ring/verify.hpp"

using namespace z2ring;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("z2ring_test_" + name);
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST(Fnv1a, KnownValues) {
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}

TEST(CacheKey, DependsOnR) {
  EXPECT_EQ(classification_cache_key(4).size(), 16U);
  EXPECT_EQ(classification_cache_key(4), classification_cache_key(4));
  EXPECT_NE(classification_cache_key(4), classification_cache_key(5));
}

TEST(ResultCache, StoreThenLoad) {
  const ResultCache cache(scratch_dir("cache"));
  EXPECT_FALSE(cache.load("abc").has_value());
  cache.store("abc", "{\"r\": 1}\n");
  EXPECT_EQ(cache.load("abc"), "{\"r\": 1}\n");
  cache.store("abc", "{}\n");
  EXPECT_EQ(cache.load("abc"), "{}\n");
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(cache.dir())) ++files;
  EXPECT_EQ(files, 1U);
}

TEST(WriteFileAtomic, ReplacesContents) {
  const fs::path dir = scratch_dir("atomic");
  fs::create_directories(dir);
  const fs::path file = dir / "out.txt";
  write_file_atomic(file, "first");
  write_file_atomic(file, "second");
  std::ifstream in(file);
  std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(s, "second");
}

TEST(Verify, SuitesPass) {
  VerifyOptions opt;
  opt.samples = 300;
  opt.max_r = 5;
  const VerifyReport report = run_suite("all", opt);
  EXPECT_TRUE(report.all_passed()) << report_to_text(report);
  EXPECT_EQ(report_to_json(report).at("failures"), 0);
  EXPECT_THROW(run_suite("nope", opt), InvalidArgument);
}
