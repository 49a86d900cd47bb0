#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "adelink/roots.hpp"

namespace adelink {

inline constexpr int kCacheFormatVersion = 1;

// Resolution order: explicit override (the CLI's --cache-dir flag), then the
// ADELINK_CACHE_DIR environment variable, then $XDG_CACHE_HOME/adelink,
// then ~/.cache/adelink.
std::filesystem::path cache_directory(const std::optional<std::string>& override_dir);

// Load-or-enumerate with persistence. A missing entry is enumerated and
// written; a corrupt or version-mismatched entry is re-enumerated and
// overwritten (CacheCorrupt never escapes this call).
RootSystem cache_roundtrip(const DynkinDiagram& d,
                           const std::optional<std::string>& override_dir);

void cache_clear(const std::optional<std::string>& override_dir);

}  // namespace adelink
