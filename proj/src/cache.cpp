#include "graphgen/cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

#include <unistd.h>

#include "graphgen/errors.hpp"

namespace graphgen {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kSuffix = ".json";

nlohmann::json header_for(const GenRequest& req) {
  nlohmann::json h = {{"format_version", kCacheFormatVersion},
                      {"family", family_name(req.family)},
                      {"n", req.n},
                      {"k", req.k},
                      {"s", req.s}};
  h["min_degree"] = req.min_degree ? nlohmann::json(*req.min_degree) : nlohmann::json(nullptr);
  return h;
}

OutputRecord parse_entry(const fs::path& path, const std::optional<GenRequest>& expected) {
  std::ifstream in(path);
  if (!in) throw CacheError(path.string(), "cannot open cache entry");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw CacheError(path.string(), std::string("corrupt cache entry: ") + e.what());
  }
  try {
    const auto& header = j.at("header");
    const std::string version = header.at("format_version").get<std::string>();
    if (version != kCacheFormatVersion) {
      throw CacheError(path.string(), "cache format version " + version + ", expected " +
                                          std::string(kCacheFormatVersion));
    }
    if (expected && header != header_for(*expected)) {
      throw CacheError(path.string(), "cache header does not match the request");
    }
    OutputRecord record = record_from_json(j.at("record"));
    // Rebuilding checks every stored key and symmetry factor against its graph.
    (void)record_to_sum(record);
    const auto family = parse_family(record.family);
    if (!family || header.at("family").get<std::string>() != record.family || header.at("n") != record.n ||
        header.at("k") != record.k || header.at("s") != record.s) {
      throw CacheError(path.string(), "cache record does not match its header");
    }
    return record;
  } catch (const CacheError&) {
    throw;
  } catch (const std::exception& e) {
    throw CacheError(path.string(), std::string("corrupt cache entry: ") + e.what());
  }
}

}  // namespace

DiskCache::DiskCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path DiskCache::path_for(const GenRequest& req) const {
  std::ostringstream name;
  name << family_name(req.family) << "_n" << req.n << "_k" << req.k << "_s" << req.s << "_d";
  if (req.min_degree) {
    name << *req.min_degree;
  } else {
    name << "none";
  }
  name << kSuffix;
  return dir_ / name.str();
}

std::optional<OutputRecord> DiskCache::load(const GenRequest& req) const {
  const fs::path path = path_for(req);
  std::error_code ec;
  if (!fs::exists(path, ec)) return std::nullopt;
  return parse_entry(path, req);
}

void DiskCache::store(const GenRequest& req, const OutputRecord& record) const {
  fs::create_directories(dir_);
  const nlohmann::json j = {{"header", header_for(req)}, {"record", to_json(record)}};
  write_file_atomic(path_for(req), j.dump(2) + "\n");
}

std::vector<fs::path> DiskCache::entries() const {
  std::vector<fs::path> out;
  std::error_code ec;
  if (!fs::is_directory(dir_, ec)) return out;
  for (const auto& entry : fs::directory_iterator(dir_)) {
    if (entry.is_regular_file() && entry.path().extension() == kSuffix) out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

void DiskCache::check_all() const {
  for (const fs::path& path : entries()) (void)parse_entry(path, std::nullopt);
}

std::size_t DiskCache::clear() const {
  std::size_t removed = 0;
  for (const fs::path& path : entries()) removed += fs::remove(path) ? 1 : 0;
  return removed;
}

fs::path resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("GRAPHGEN_CACHE_DIR"); env && *env) return env;
  return ".graphgen-cache";
}

void write_file_atomic(const fs::path& path, std::string_view content) {
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw fs::filesystem_error("cannot write", tmp, std::make_error_code(std::errc::io_error));
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw fs::filesystem_error("cannot write", tmp, std::make_error_code(std::errc::io_error));
    }
  }
  fs::rename(tmp, path);
}

}  // namespace graphgen
