#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace judgekit::gateway {

// One file per completed request under the cache directory, named by the
// (model, prompt) content hash. Writes go through a temp file + rename so
// readers never see partial entries.
class ResponseCache {
 public:
  explicit ResponseCache(std::string dir);

  std::optional<std::string> get(const std::string& model, std::uint64_t content_hash) const;
  void put(const std::string& model, std::uint64_t content_hash, const std::string& content) const;

 private:
  std::string path_for(const std::string& model, std::uint64_t content_hash) const;

  std::string dir_;
};

}  // namespace judgekit::gateway
