#pragma once

#include <string>

#include "judgekit/gateway/provider.hpp"

namespace judgekit::gateway {

// Chat-completions-style HTTP backend. `base_url` is scheme://host[:port]
// with an optional path prefix (e.g. http://localhost:8080/v1); completions
// go to {prefix}/chat/completions and token scoring to {prefix}/completions
// using prompt echo with logprobs. Responses other than 200 map to:
// 401/403 AuthError, 429 RateLimited, 408/5xx TimedOut (transient), anything
// else ProtocolError; so do malformed bodies.
class HttpProvider : public Provider {
 public:
  HttpProvider(std::string base_url, std::string api_key, int timeout_seconds = 60);

  std::string complete(const ChatRequest& request) override;
  std::vector<TokenScore> score_tokens(const std::string& text,
                                       const std::optional<std::string>& condition,
                                       const std::string& model) override;
  bool supports_scoring() const override { return true; }

  // Reads JUDGE_API_BASE / JUDGE_API_KEY from the environment.
  static HttpProvider from_env();

 private:
  std::string scheme_host_;  // scheme://host:port
  std::string path_prefix_;  // "" or "/v1"
  std::string api_key_;
  int timeout_seconds_;
};

}  // namespace judgekit::gateway
