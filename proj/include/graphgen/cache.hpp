#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphgen/graph_sum.hpp"
#include "graphgen/record.hpp"
#include "graphgen/recursion.hpp"

namespace graphgen {

inline constexpr std::string_view kCacheFormatVersion = "graphgen-cache-v1";

/// One JSON file per (family, n, k, s, min_degree). Files whose header or
/// body does not match are reported, never rebuilt over.
class DiskCache {
 public:
  explicit DiskCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const noexcept { return dir_; }
  std::filesystem::path path_for(const GenRequest& req) const;

  /// nullopt when no entry exists. CacheError on a version mismatch, a
  /// header that names another request, or an unreadable body.
  std::optional<OutputRecord> load(const GenRequest& req) const;
  /// Written to a temporary file and renamed into place.
  void store(const GenRequest& req, const OutputRecord& record) const;

  /// Entry files in name order; a missing directory has none.
  std::vector<std::filesystem::path> entries() const;
  /// CacheError naming the first entry that fails to load.
  void check_all() const;
  /// Number of entries removed.
  std::size_t clear() const;

 private:
  std::filesystem::path dir_;
};

/// flag, then GRAPHGEN_CACHE_DIR, then ./.graphgen-cache.
std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag);

/// Writes content to path through a sibling temporary file and a rename.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace graphgen
