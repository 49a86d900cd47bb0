#include "adelink/cache.hpp"

#include <cstdlib>
#include <fstream>

namespace adelink {

namespace fs = std::filesystem;

fs::path cache_directory(const std::optional<std::string>& override_dir) {
  if (override_dir) return fs::path(*override_dir);
  if (const char* env = std::getenv("ADELINK_CACHE_DIR")) return fs::path(env);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
    return fs::path(xdg) / "adelink";
  if (const char* home = std::getenv("HOME"))
    return fs::path(home) / ".cache" / "adelink";
  return fs::temp_directory_path() / "adelink-cache";
}

namespace {

fs::path entry_path(const fs::path& dir, const DynkinDiagram& d) {
  return dir / (d.name() + ".json");
}

}  // namespace

RootSystem cache_roundtrip(const DynkinDiagram& d,
                           const std::optional<std::string>& override_dir) {
  fs::path dir = cache_directory(override_dir);
  fs::path file = entry_path(dir, d);

  if (fs::exists(file)) {
    try {
      std::ifstream in(file);
      nlohmann::json entry = nlohmann::json::parse(in);
      if (!entry.is_object() || entry.value("format_version", -1) != kCacheFormatVersion ||
          entry.value("key", "") != d.name() || !entry.contains("payload"))
        fail(ErrorCode::CacheCorrupt, "cache entry header mismatch");
      return root_system_from_json(entry["payload"]);
    } catch (const std::exception&) {
      // CacheCorrupt (or unreadable JSON): fall through to rebuild.
    }
  }

  RootSystem rs = enumerate_roots(d);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (!ec) {
    nlohmann::json entry = {{"format_version", kCacheFormatVersion},
                            {"key", d.name()},
                            {"payload", root_system_to_json(rs)}};
    std::ofstream out(file);
    out << entry.dump();  // fixed serialization: byte-identical reloads
  }
  return rs;
}

void cache_clear(const std::optional<std::string>& override_dir) {
  fs::path dir = cache_directory(override_dir);
  std::error_code ec;
  if (!fs::exists(dir, ec)) return;
  for (const auto& e : fs::directory_iterator(dir, ec))
    if (e.path().extension() == ".json") fs::remove(e.path(), ec);
}

}  // namespace adelink
