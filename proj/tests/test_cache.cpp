#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "adelink/cache.hpp"

using namespace adelink;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("adelink-test-" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::optional<std::string> opt() const { return path.string(); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("directory resolution precedence") {
  CHECK(cache_directory(std::optional<std::string>{"/x/y"}) == fs::path("/x/y"));
  // Without an override, the result honours ADELINK_CACHE_DIR.
  setenv("ADELINK_CACHE_DIR", "/tmp/adelink-env-test", 1);
  CHECK(cache_directory(std::nullopt) == fs::path("/tmp/adelink-env-test"));
  unsetenv("ADELINK_CACHE_DIR");
}

TEST_CASE("cold write, warm byte-identical reload") {
  TempDir dir;
  DynkinDiagram d = parse_diagram("D4");
  RootSystem cold = cache_roundtrip(d, dir.opt());
  CHECK(cold.num_roots() == 24);
  fs::path file = dir.path / "D4.json";
  REQUIRE(fs::exists(file));
  std::string bytes = slurp(file);

  RootSystem warm = cache_roundtrip(d, dir.opt());
  CHECK(warm.roots == cold.roots);
  CHECK(root_system_to_json(warm).dump() == root_system_to_json(cold).dump());
  CHECK(slurp(file) == bytes);
}

TEST_CASE("corrupt payloads rebuild transparently") {
  TempDir dir;
  DynkinDiagram d = parse_diagram("A2");
  cache_roundtrip(d, dir.opt());
  fs::path file = dir.path / "A2.json";

  SUBCASE("truncated file") {
    std::ofstream(file) << "{ not json";
  }
  SUBCASE("format version mismatch") {
    std::ofstream(file) << R"({"format_version":-1,"key":"A2","payload":{}})";
  }
  SUBCASE("payload invariant broken") {
    nlohmann::json entry = nlohmann::json::parse(slurp(file));
    entry["payload"]["roots"][0][0] = 7;
    std::ofstream(file) << entry.dump();
  }
  RootSystem rebuilt = cache_roundtrip(d, dir.opt());
  CHECK(rebuilt.num_roots() == 6);
  // The rebuilt entry is valid again.
  nlohmann::json entry = nlohmann::json::parse(slurp(file));
  CHECK(entry["format_version"] == kCacheFormatVersion);
}

TEST_CASE("cache clear") {
  TempDir dir;
  cache_roundtrip(parse_diagram("A1"), dir.opt());
  CHECK(fs::exists(dir.path / "A1.json"));
  cache_clear(dir.opt());
  CHECK_FALSE(fs::exists(dir.path / "A1.json"));
}
