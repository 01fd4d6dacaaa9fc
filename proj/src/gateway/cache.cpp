#include "judgekit/gateway/cache.hpp"

#include <filesystem>
#include <fstream>
#include <utility>

#include "judgekit/detail/hash.hpp"
#include "judgekit/errors.hpp"

namespace judgekit::gateway {

namespace fs = std::filesystem;

ResponseCache::ResponseCache(std::string dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) raise(ErrorCode::IoError, "cannot create cache directory " + dir_ + ": " + ec.message());
}

std::string ResponseCache::path_for(const std::string& model, std::uint64_t content_hash) const {
  // Model names may contain path-hostile characters; hash them too.
  return dir_ + "/" + detail::to_hex(detail::fnv1a64(model)) + "-" +
         detail::to_hex(content_hash) + ".txt";
}

std::optional<std::string> ResponseCache::get(const std::string& model,
                                              std::uint64_t content_hash) const {
  std::ifstream in(path_for(model, content_hash), std::ios::binary);
  if (!in.is_open()) return std::nullopt;
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return content;
}

void ResponseCache::put(const std::string& model, std::uint64_t content_hash,
                        const std::string& content) const {
  std::string final_path = path_for(model, content_hash);
  std::string temp_path = final_path + ".tmp";
  {
    std::ofstream out(temp_path, std::ios::binary | std::ios::trunc);
    if (!out.is_open()) raise(ErrorCode::IoError, "cannot write cache entry " + temp_path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out.good()) raise(ErrorCode::IoError, "short write to cache entry " + temp_path);
  }
  std::error_code ec;
  fs::rename(temp_path, final_path, ec);
  if (ec) raise(ErrorCode::IoError, "cannot finalize cache entry " + final_path + ": " + ec.message());
}

}  // namespace judgekit::gateway
